//! Parameter estimation for the norm distribution from i.i.d. samples.
//!
//! Two estimators:
//!
//! * **Method of moments** ([`fit_moments`]): since `E[Y²] = 3σ² + a²`,
//!   fixing the sample second moment `m₂` makes `σ² = (m₂ − a²)/3` a
//!   closed-form function of `a`, collapsing the fit to a one-dimensional
//!   root-find of `mean(a, σ(a)) = m₁` on `a ∈ [0, √m₂]`. Robust,
//!   derivative-free, and the initializer for the MLE.
//! * **Maximum likelihood** ([`fit_mle`]): derivative-free Nelder–Mead
//!   simplex descent on the negative log-likelihood in the coordinates
//!   `(a, ln σ)` — the log reparameterization keeps `σ > 0` without
//!   constraints, and `a` is evaluated through `|a|` so the simplex may
//!   wander across 0 freely (the law is even in `a`).
//!
//! Both estimators are scale-equivariant: fitting `c·samples` yields
//! `(c·â, c·σ̂)`. That is a structural property — the moment bracket, the
//! initial simplex steps, and every convergence test are relative — and
//! the tests assert it to 1e-6.
//!
//! There is no separate estimator for the squared-norm family: fit the
//! norm law to the square roots of the data instead (the push-forward is
//! monotone, so likelihood and moments both transport exactly).

use serde::Serialize;
use std::cell::Cell;
use std::fmt;

use crate::dist::{Abar, DistError};
use crate::numeric::{find_root_bracketed, RootError, Tolerance};

/// Minimum sample count for the estimators (a 1D/2D fit on fewer points
/// is numerically legal but statistically meaningless).
const MIN_FIT_SAMPLES: usize = 10;
/// Relative floor applied to σ² during the moment solve so the bracket
/// endpoint `a = √m₂` keeps a strictly positive scale parameter.
const SIGMA_SQ_FLOOR_REL: f64 = 1e-12;
/// Nelder–Mead objective-evaluation budget.
const MLE_EVAL_BUDGET: usize = 2000;
/// Nelder–Mead convergence: simplex diameter below this, relative to the
/// current best point's scale.
const MLE_REL_DIAMETER: f64 = 1e-8;

/// Errors from sample validation or the underlying numerics.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FitError {
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error(
        "sample {index} is {value}; the law is supported on y > 0, so the \
         likelihood there is zero (log-likelihood −∞)"
    )]
    InvalidSample { index: usize, value: f64 },
    #[error(transparent)]
    Dist(#[from] DistError),
    #[error("moment equation root-find failed: {0}")]
    Root(#[from] RootError),
}

/// Which estimator produced a [`FitResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitMethod {
    Moments,
    Mle,
}

impl fmt::Display for FitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitMethod::Moments => "moments",
            FitMethod::Mle => "mle",
        })
    }
}

/// An estimate with its diagnostics. Serializes to a flat JSON object;
/// `note` is omitted when absent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    /// Estimated mean-vector norm, ≥ 0.
    pub a_hat: f64,
    /// Estimated per-component standard deviation, > 0.
    pub sigma_hat: f64,
    /// The estimator used.
    pub method: FitMethod,
    /// Log-likelihood of the data at the estimate.
    pub log_likelihood: f64,
    /// Objective/criterion evaluations spent.
    pub iterations: usize,
    /// Whether the estimator met its convergence test within budget.
    pub converged: bool,
    /// Diagnostic for non-standard outcomes (boundary solutions,
    /// exhausted budgets).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FitResult {
    /// The fitted distribution.
    pub fn distribution(&self) -> Result<Abar, DistError> {
        Abar::new(self.a_hat, self.sigma_hat)
    }
}

fn validate_samples(samples: &[f64], needed: usize) -> Result<(), FitError> {
    if samples.len() < needed {
        return Err(FitError::TooFewSamples { needed, got: samples.len() });
    }
    for (index, &value) in samples.iter().enumerate() {
        if !(value > 0.0 && value.is_finite()) {
            return Err(FitError::InvalidSample { index, value });
        }
    }
    Ok(())
}

/// Sum of log-densities `Σᵢ ln f(yᵢ)` at the given parameters. Finite for
/// any valid parameters, since every sample is required to be strictly
/// positive (a sample at or below 0 has zero density and is reported as an
/// error rather than as `−∞`).
pub fn log_likelihood(dist: &Abar, samples: &[f64]) -> Result<f64, FitError> {
    validate_samples(samples, 1)?;
    Ok(samples.iter().map(|&y| dist.ln_pdf(y)).sum())
}

/// Method-of-moments estimate.
///
/// Matches the first two sample moments: `σ²(a) = (m₂ − a²)/3` (floored at
/// `1e-12·m₂` so the scale never collapses) and `a` solves
/// `mean(a, σ(a)) = m₁` on `[0, √m₂]`. The model mean along this
/// constraint is increasing in `a` and its minimum sits at `a = 0`; when
/// the sample mean is below even that minimum (a more dispersed-than-
/// Maxwell sample, common under sampling noise when the true `a` is 0),
/// there is no interior root and the boundary solution `a = 0` is returned
/// with `converged = false` and a diagnostic note.
pub fn fit_moments(samples: &[f64]) -> Result<FitResult, FitError> {
    validate_samples(samples, MIN_FIT_SAMPLES)?;
    let n = samples.len() as f64;
    let m1 = samples.iter().sum::<f64>() / n;
    let m2 = samples.iter().map(|&y| y * y).sum::<f64>() / n;

    let sigma_for = |a: f64| ((m2 - a * a) / 3.0).max(SIGMA_SQ_FLOOR_REL * m2).sqrt();
    let evals = Cell::new(0usize);
    let gap = |a: f64| {
        evals.set(evals.get() + 1);
        Abar::new(a, sigma_for(a)).expect("bracket keeps parameters valid").mean() - m1
    };

    let hi = m2.sqrt();
    let (a_hat, converged, note) = if gap(0.0) > 0.0 {
        // Sample mean below the a=0 model minimum: boundary solution.
        (
            0.0,
            false,
            Some(String::from(
                "sample mean is below the model's a=0 minimum for the observed second \
                 moment; returning the boundary solution a=0 (Maxwell regime)",
            )),
        )
    } else if gap(hi) < 0.0 {
        // Unreachable for genuine data (m₁ ≤ √m₂ by Cauchy–Schwarz), kept
        // as a guarded boundary rather than a panic.
        (
            hi,
            false,
            Some(String::from(
                "sample mean exceeds the model's maximum for the observed second \
                 moment; returning the boundary solution a=√m₂",
            )),
        )
    } else {
        let root = find_root_bracketed(gap, 0.0, hi, Tolerance::new(1e-12, 0.0))?;
        (root, true, None)
    };

    let sigma_hat = sigma_for(a_hat);
    let dist = Abar::new(a_hat, sigma_hat)?;
    Ok(FitResult {
        a_hat,
        sigma_hat,
        method: FitMethod::Moments,
        log_likelihood: log_likelihood(&dist, samples)?,
        iterations: evals.get(),
        converged,
        note,
    })
}

/// Maximum-likelihood estimate by Nelder–Mead in `(a, ln σ)`.
///
/// Initialized from [`fit_moments`] unless `init` is given; because the
/// moments estimate is a simplex vertex and the best vertex is never
/// discarded, the fitted log-likelihood can never fall below the moments
/// fit's. Converges when the simplex diameter drops below 1e-8 relative
/// to the best point's scale; exhausting the 2000-evaluation budget
/// returns the best point found with `converged = false`.
pub fn fit_mle(samples: &[f64], init: Option<(f64, f64)>) -> Result<FitResult, FitError> {
    validate_samples(samples, MIN_FIT_SAMPLES)?;

    let (a0, sigma0) = match init {
        Some((a, sigma)) => {
            Abar::new(a, sigma)?; // validate before using as a seed
            (a, sigma)
        }
        None => {
            let moments = fit_moments(samples)?;
            (moments.a_hat, moments.sigma_hat)
        }
    };

    let evals = Cell::new(0usize);
    // Negative log-likelihood over the unconstrained plane: σ through its
    // log, a through its absolute value (the law is even in a). Parameter
    // combinations the constructor refuses (overflowed exp, subnormals)
    // are treated as infinitely bad rather than as errors.
    let objective = |p: [f64; 2]| -> f64 {
        evals.set(evals.get() + 1);
        match Abar::new(p[0].abs(), p[1].exp()) {
            Ok(dist) => -samples.iter().map(|&y| dist.ln_pdf(y)).sum::<f64>(),
            Err(_) => f64::INFINITY,
        }
    };

    // Initial simplex: the seed plus one step per coordinate. The a-step
    // scales with the seed so the whole trajectory is scale-equivariant;
    // the ln σ step is dimensionless by construction.
    let step_a = 0.05 * f64::max(a0.abs(), sigma0);
    let start = [a0, sigma0.ln()];
    let simplex = [
        start,
        [start[0] + step_a, start[1]],
        [start[0], start[1] + 0.05],
    ];

    let outcome = nelder_mead(objective, simplex, MLE_EVAL_BUDGET, &evals);

    let a_hat = outcome.best[0].abs();
    let sigma_hat = outcome.best[1].exp();
    let dist = Abar::new(a_hat, sigma_hat)?;
    Ok(FitResult {
        a_hat,
        sigma_hat,
        method: FitMethod::Mle,
        log_likelihood: log_likelihood(&dist, samples)?,
        iterations: evals.get(),
        converged: outcome.converged,
        note: if outcome.converged {
            None
        } else {
            Some(format!("evaluation budget ({MLE_EVAL_BUDGET}) exhausted before convergence"))
        },
    })
}

struct SimplexOutcome {
    best: [f64; 2],
    converged: bool,
}

/// Textbook Nelder–Mead on ℝ² (reflection 1, expansion 2, contraction ½,
/// shrink ½), stopping when the simplex diameter is below
/// [`MLE_REL_DIAMETER`] relative to the best vertex's coordinate scale or
/// when the evaluation counter (shared with the objective) passes
/// `budget`.
fn nelder_mead<F: Fn([f64; 2]) -> f64>(
    f: F,
    initial: [[f64; 2]; 3],
    budget: usize,
    evals: &Cell<usize>,
) -> SimplexOutcome {
    let mut verts: Vec<([f64; 2], f64)> = initial.iter().map(|&p| (p, f(p))).collect();

    loop {
        verts.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = verts[0];
        let worst = verts[2];

        // Convergence: simplex diameter relative to the best point's scale
        // (|a| and σ live on that scale; ln σ differences are already
        // dimensionless but dividing by a scale ≥ 1e-... keeps one rule).
        let scale = f64::max(best.0[0].abs(), best.0[1].exp()).max(f64::MIN_POSITIVE);
        let mut diameter: f64 = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                diameter = diameter.max((verts[i].0[0] - verts[j].0[0]).abs() / scale);
                diameter = diameter.max((verts[i].0[1] - verts[j].0[1]).abs());
            }
        }
        if diameter < MLE_REL_DIAMETER {
            return SimplexOutcome { best: best.0, converged: true };
        }
        if evals.get() >= budget {
            return SimplexOutcome { best: best.0, converged: false };
        }

        let centroid = [
            0.5 * (verts[0].0[0] + verts[1].0[0]),
            0.5 * (verts[0].0[1] + verts[1].0[1]),
        ];
        let dir = [centroid[0] - worst.0[0], centroid[1] - worst.0[1]];
        let at = |t: f64| [centroid[0] + t * dir[0], centroid[1] + t * dir[1]];

        let reflected = at(1.0);
        let fr = f(reflected);
        if fr < best.1 {
            let expanded = at(2.0);
            let fe = f(expanded);
            verts[2] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < verts[1].1 {
            verts[2] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 { at(0.5) } else { at(-0.5) };
            let fc = f(contracted);
            if fc < worst.1.min(fr) {
                verts[2] = (contracted, fc);
            } else {
                // shrink toward the best vertex
                for k in 1..3 {
                    let p = [
                        0.5 * (verts[0].0[0] + verts[k].0[0]),
                        0.5 * (verts[0].0[1] + verts[k].0[1]),
                    ];
                    verts[k] = (p, f(p));
                }
            }
        }
    }
}
