//! Thomas-cluster-process validation harness.
//!
//! A 3D Thomas cluster process places parent points by a homogeneous
//! Poisson process, gives each parent a Poisson number of daughters, and
//! displaces every daughter from its parent by an isotropic Gaussian:
//!
//! * parent count ~ Poisson(intensity · volume), parents uniform in the
//!   box `[−w, w]³`;
//! * daughters per parent ~ Poisson(mean_daughters);
//! * displacement ~ N(0, σ²·I₃).
//!
//! For a parent at distance `a` from a reference point, each daughter's
//! distance to that reference is the norm of a 3D Gaussian vector with
//! mean norm `a` — i.e. it follows the norm distribution
//! [`Abar`](crate::dist::Abar) with parameters `(a, σ)`. That conditional
//! distance law is exactly what [`validate_distance_law`] checks
//! empirically, cluster by cluster, with one-sample Kolmogorov–Smirnov
//! tests at α = 0.01.
//!
//! Per-cluster (rather than pooled) testing is deliberate: pooling
//! daughters across parents mixes different `a` values and would test a
//! mixture law instead. Daughters falling outside the box are kept — the
//! validated law is conditional on the parent location and does not care
//! about the box.
//!
//! This module also houses the KS machinery itself ([`ks_statistic`],
//! [`ks_statistic_two_sample`]) — the goodness-of-fit engine the sampling
//! tests reuse.

use serde::Serialize;

use crate::dist::Abar;
use crate::numeric::RandomStream;
use crate::sample::{sample_norm3, MeanVector3, SampleBatch};

/// Asymptotic Kolmogorov–Smirnov critical coefficient at α = 0.01: the
/// one-sample threshold is `1.628/√n`, the two-sample threshold
/// `1.628·√((n+m)/(n·m))`.
pub const KS_CRITICAL_COEFF_ALPHA_01: f64 = 1.628;

/// Minimum daughters a cluster needs before its KS test is meaningful
/// (the asymptotic threshold is unreliable below a few dozen samples).
pub const MIN_DAUGHTERS_PER_TESTED_CLUSTER: usize = 30;

/// Minimum sample count accepted by the KS routines.
const MIN_KS_SAMPLES: usize = 10;

/// Errors from configuration, KS input validation, and the validation
/// driver.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TcpError {
    #[error("invalid cluster-process configuration: {reason}")]
    InvalidConfig { reason: String },
    #[error("Kolmogorov–Smirnov test needs at least {MIN_KS_SAMPLES} samples, got {n}")]
    TooFewSamples { n: usize },
    #[error("samples must be sorted ascending (violation at index {index})")]
    UnsortedSamples { index: usize },
    #[error(
        "requested {requested} testable clusters but the realization has only {available} \
         with at least {min_daughters} daughters; raise mean_daughters (currently \
         {mean_daughters}) or enlarge the box"
    )]
    InsufficientClusters {
        requested: usize,
        available: usize,
        min_daughters: usize,
        mean_daughters: f64,
    },
    #[error("clusters_to_test must be at least 1")]
    ZeroClustersRequested,
}

/// Configuration of one Thomas-cluster-process simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TcpConfig {
    box_half_width: f64,
    parent_intensity: f64,
    mean_daughters: f64,
    scatter_sigma: f64,
    seed: u64,
    stream_id: u64,
}

impl TcpConfig {
    /// Validates and builds a configuration. All magnitudes must be
    /// positive and finite, and the expected parent count
    /// `intensity · (2w)³` must be at least 1 (an expected-empty box is a
    /// misconfiguration, not a simulation).
    pub fn new(
        box_half_width: f64,
        parent_intensity: f64,
        mean_daughters: f64,
        scatter_sigma: f64,
        seed: u64,
        stream_id: u64,
    ) -> Result<Self, TcpError> {
        let positive = |name: &str, v: f64| -> Result<(), TcpError> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(TcpError::InvalidConfig { reason: format!("{name} must be positive and finite, got {v}") })
            }
        };
        positive("box_half_width", box_half_width)?;
        positive("parent_intensity", parent_intensity)?;
        positive("mean_daughters", mean_daughters)?;
        positive("scatter_sigma", scatter_sigma)?;
        let cfg = Self {
            box_half_width,
            parent_intensity,
            mean_daughters,
            scatter_sigma,
            seed,
            stream_id,
        };
        let expected = cfg.expected_parents();
        if !(expected.is_finite() && expected >= 1.0) {
            return Err(TcpError::InvalidConfig {
                reason: format!(
                    "expected parent count intensity·(2w)³ = {expected} must be ≥ 1 and finite"
                ),
            });
        }
        Ok(cfg)
    }

    pub fn box_half_width(&self) -> f64 {
        self.box_half_width
    }

    pub fn parent_intensity(&self) -> f64 {
        self.parent_intensity
    }

    pub fn mean_daughters(&self) -> f64 {
        self.mean_daughters
    }

    pub fn scatter_sigma(&self) -> f64 {
        self.scatter_sigma
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Expected parent count `intensity · (2w)³`.
    pub fn expected_parents(&self) -> f64 {
        let side = 2.0 * self.box_half_width;
        self.parent_intensity * side * side * side
    }

    /// Draws one realization. Fully deterministic in `(seed, stream_id)`:
    /// the draw order is parent count, then all parent coordinates, then
    /// per parent (in order) its daughter count followed by the daughter
    /// displacements.
    pub fn realize(&self) -> TcpRealization {
        let mut stream = RandomStream::new(self.seed, self.stream_id);
        let w = self.box_half_width;

        let parent_count = stream.poisson(self.expected_parents());
        let mut parents = Vec::with_capacity(parent_count as usize);
        for _ in 0..parent_count {
            let x = (2.0 * stream.uniform() - 1.0) * w;
            let y = (2.0 * stream.uniform() - 1.0) * w;
            let z = (2.0 * stream.uniform() - 1.0) * w;
            parents.push([x, y, z]);
        }

        let mut daughters = Vec::new();
        for (index, parent) in parents.iter().enumerate() {
            let count = stream.poisson(self.mean_daughters);
            for _ in 0..count {
                let dx = stream.gaussian(0.0, self.scatter_sigma);
                let dy = stream.gaussian(0.0, self.scatter_sigma);
                let dz = stream.gaussian(0.0, self.scatter_sigma);
                daughters.push((index, [parent[0] + dx, parent[1] + dy, parent[2] + dz]));
            }
        }

        TcpRealization { parents, daughters, reference: [0.0; 3] }
    }
}

/// One draw of the cluster process: parent points, daughter points tagged
/// with their parent's index, and the reference point distances are
/// measured from (the origin).
#[derive(Debug, Clone, PartialEq)]
pub struct TcpRealization {
    parents: Vec<[f64; 3]>,
    daughters: Vec<(usize, [f64; 3])>,
    reference: [f64; 3],
}

impl TcpRealization {
    pub fn parents(&self) -> &[[f64; 3]] {
        &self.parents
    }

    pub fn daughters(&self) -> &[(usize, [f64; 3])] {
        &self.daughters
    }

    pub fn reference(&self) -> [f64; 3] {
        self.reference
    }

    /// Distance from the reference point to `p`.
    fn distance_to_reference(&self, p: [f64; 3]) -> f64 {
        let dx = p[0] - self.reference[0];
        let dy = p[1] - self.reference[1];
        let dz = p[2] - self.reference[2];
        dx.hypot(dy).hypot(dz)
    }

    /// Daughter-to-reference distances of one cluster, sorted ascending.
    pub fn cluster_distances(&self, parent_index: usize) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .daughters
            .iter()
            .filter(|(idx, _)| *idx == parent_index)
            .map(|(_, p)| self.distance_to_reference(*p))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    /// Writes the realization as CSV: parents in provenance comments, then
    /// an `x,y,z,parent_index` header and one row per daughter.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# parents={}, daughters={}", self.parents.len(), self.daughters.len())?;
        for (i, p) in self.parents.iter().enumerate() {
            writeln!(out, "# parent {i}: {},{},{}", p[0], p[1], p[2])?;
        }
        writeln!(out, "x,y,z,parent_index")?;
        for (idx, p) in &self.daughters {
            writeln!(out, "{},{},{},{idx}", p[0], p[1], p[2])?;
        }
        Ok(())
    }
}

/// Distances from the origin to `n` daughters of a single cluster whose
/// center sits at `(center_distance, 0, 0)` — the geometric restatement of
/// the norm-of-three-Gaussians sampler, and by construction a batch of
/// norm-distribution draws with parameters `(center_distance, σ)`.
pub fn cluster_distance_samples(
    center_distance: f64,
    scatter_sigma: f64,
    n: usize,
    stream: RandomStream,
) -> Result<SampleBatch, crate::dist::DistError> {
    // daughter = center + N(0, σ²I₃); its norm is the norm of a Gaussian
    // vector with mean (center_distance, 0, 0).
    sample_norm3(MeanVector3::new(center_distance, 0.0, 0.0), scatter_sigma, n, stream)
}

/// Outcome of one Kolmogorov–Smirnov comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsOutcome {
    /// The KS statistic `D` (supremum distance between the CDFs).
    pub statistic: f64,
    /// Critical value at α = 0.01.
    pub threshold: f64,
}

impl KsOutcome {
    /// True when the statistic is below the α = 0.01 critical value.
    pub fn passes(&self) -> bool {
        self.statistic <= self.threshold
    }
}

fn ensure_sorted(samples: &[f64]) -> Result<(), TcpError> {
    if samples.len() < MIN_KS_SAMPLES {
        return Err(TcpError::TooFewSamples { n: samples.len() });
    }
    for (index, pair) in samples.windows(2).enumerate() {
        // negated on purpose: a NaN fails `<=` and must be reported as
        // unsorted rather than slip through a `>` comparison
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(pair[0] <= pair[1]) {
            return Err(TcpError::UnsortedSamples { index: index + 1 });
        }
    }
    Ok(())
}

/// One-sample KS statistic of sorted `samples` against the reference
/// `cdf`, with its α = 0.01 threshold `1.628/√n`:
///
/// ```text
/// D = max_i max(|i/n − F(xᵢ)|, |F(xᵢ) − (i−1)/n|)
/// ```
///
/// The input must already be sorted ascending (checked — sorting belongs
/// to the caller, who may have it for free).
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<KsOutcome, TcpError> {
    ensure_sorted(samples)?;
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        let upper = ((i + 1) as f64 / n - f).abs();
        let lower = (f - i as f64 / n).abs();
        d = d.max(upper).max(lower);
    }
    Ok(KsOutcome { statistic: d, threshold: KS_CRITICAL_COEFF_ALPHA_01 / n.sqrt() })
}

/// Two-sample KS statistic between two sorted samples, with the α = 0.01
/// threshold `1.628·√((n+m)/(n·m))`. Used to show two samplers draw from
/// the same law without naming that law.
pub fn ks_statistic_two_sample(xs: &[f64], ys: &[f64]) -> Result<KsOutcome, TcpError> {
    ensure_sorted(xs)?;
    ensure_sorted(ys)?;
    let (n, m) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        // advance through ties as a block so the ECDF step is complete
        let v = xs[i].min(ys[j]);
        while i < n && xs[i] == v {
            i += 1;
        }
        while j < m && ys[j] == v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let (nf, mf) = (n as f64, m as f64);
    Ok(KsOutcome {
        statistic: d,
        threshold: KS_CRITICAL_COEFF_ALPHA_01 * ((nf + mf) / (nf * mf)).sqrt(),
    })
}

/// Per-cluster result inside a [`TcpValidationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClusterCheck {
    /// Parent distance from the reference — the `a` parameter under test.
    pub a: f64,
    /// Number of daughters in the cluster.
    pub n: usize,
    /// KS statistic of the cluster's distances vs the norm-law CDF.
    #[serde(rename = "D")]
    pub statistic: f64,
    /// α = 0.01 critical value for this cluster's sample size.
    pub threshold: f64,
    /// statistic ≤ threshold
    pub pass: bool,
}

/// Validation report: the configuration, one row per tested cluster, and
/// the overall verdict (pass iff at least 95% of clusters pass).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TcpValidationReport {
    pub config: TcpConfig,
    pub clusters: Vec<ClusterCheck>,
    pub overall_pass: bool,
}

/// Fraction of per-cluster KS passes required for the overall verdict.
const REQUIRED_PASS_FRACTION: f64 = 0.95;

/// The empirical check of the cluster-process distance law: simulate one
/// realization of `cfg`, take the first `clusters_to_test` clusters having
/// at least [`MIN_DAUGHTERS_PER_TESTED_CLUSTER`] daughters, and KS-test
/// each cluster's daughter-to-origin distances against the norm-law CDF
/// with `a` = that parent's distance to the origin and `σ` = the scatter
/// sigma. Overall pass requires at least 95% of the tested clusters to
/// pass at α = 0.01.
pub fn validate_distance_law(
    cfg: &TcpConfig,
    clusters_to_test: usize,
) -> Result<TcpValidationReport, TcpError> {
    if clusters_to_test == 0 {
        return Err(TcpError::ZeroClustersRequested);
    }
    let realization = cfg.realize();

    let mut daughter_counts = vec![0usize; realization.parents().len()];
    for (idx, _) in realization.daughters() {
        daughter_counts[*idx] += 1;
    }
    let eligible: Vec<usize> = (0..realization.parents().len())
        .filter(|&i| daughter_counts[i] >= MIN_DAUGHTERS_PER_TESTED_CLUSTER)
        .collect();
    if eligible.len() < clusters_to_test {
        return Err(TcpError::InsufficientClusters {
            requested: clusters_to_test,
            available: eligible.len(),
            min_daughters: MIN_DAUGHTERS_PER_TESTED_CLUSTER,
            mean_daughters: cfg.mean_daughters(),
        });
    }

    let mut clusters = Vec::with_capacity(clusters_to_test);
    for &parent_index in eligible.iter().take(clusters_to_test) {
        let parent = realization.parents()[parent_index];
        let a = realization.distance_to_reference(parent);
        let distances = realization.cluster_distances(parent_index);
        let dist = Abar::new(a, cfg.scatter_sigma()).expect("parent distance and sigma are valid");
        let ks = ks_statistic(&distances, |y| dist.cdf(y))?;
        clusters.push(ClusterCheck {
            a,
            n: distances.len(),
            statistic: ks.statistic,
            threshold: ks.threshold,
            pass: ks.passes(),
        });
    }

    let passes = clusters.iter().filter(|c| c.pass).count();
    let overall_pass = passes as f64 >= REQUIRED_PASS_FRACTION * clusters.len() as f64;
    Ok(TcpValidationReport { config: *cfg, clusters, overall_pass })
}
