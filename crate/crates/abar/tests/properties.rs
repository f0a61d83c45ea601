//! Property-based invariants: facts that must hold for *every* valid
//! parameter combination, not just the fixture grid. Case counts are kept
//! moderate so the suite stays fast; the acceptance tests pin the precise
//! tolerances on the standard grid.

use abar::numeric::RandomStream;
use abar::sample::{sample_norm3, MeanVector3};
use abar::{Abar, AbarPlus};
use proptest::prelude::*;

/// Mean of the zero-mean norm (Maxwell) law per unit sigma: 2√(2/π).
const MAXWELL_MEAN_COEFF: f64 = 1.595_769_121_605_730_7;

fn params() -> impl Strategy<Value = (f64, f64)> {
    // a = 0 appears with real probability so the Maxwell branch is hit.
    let a = prop_oneof![2 => Just(0.0), 8 => 0.0..100.0f64];
    let sigma = 0.1..10.0f64;
    (a, sigma)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cdf_is_a_distribution_function((a, sigma) in params(), f1 in 0.0..1.0f64, f2 in 0.0..1.0f64) {
        let d = Abar::new(a, sigma).unwrap();
        let span = a + 8.0 * sigma;
        let (y1, y2) = (f1 * span, f2 * span);
        let (lo, hi) = if y1 <= y2 { (y1, y2) } else { (y2, y1) };

        let (c_lo, c_hi) = (d.cdf(lo), d.cdf(hi));
        prop_assert!((0.0..=1.0).contains(&c_lo));
        prop_assert!((0.0..=1.0).contains(&c_hi));
        prop_assert!(c_lo <= c_hi, "cdf({lo}) = {c_lo} > cdf({hi}) = {c_hi}");
        prop_assert!(d.pdf(lo) >= 0.0);
        prop_assert!((d.cdf(lo) + d.survival(lo) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn quantile_inverts_the_cdf((a, sigma) in params(), p in 0.001..0.999f64) {
        let d = Abar::new(a, sigma).unwrap();
        let q = d.quantile(p).unwrap();
        prop_assert!(q > 0.0 && q.is_finite());
        prop_assert!((d.cdf(q) - p).abs() <= 1e-9, "cdf(quantile({p})) = {}", d.cdf(q));
    }

    #[test]
    fn quantile_is_monotone((a, sigma) in params(), p1 in 0.01..0.99f64, p2 in 0.01..0.99f64) {
        let d = Abar::new(a, sigma).unwrap();
        let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        prop_assert!(d.quantile(lo).unwrap() <= d.quantile(hi).unwrap());
    }

    #[test]
    fn log_density_is_the_log_of_the_density((a, sigma) in params(), f in 0.01..1.0f64) {
        let d = Abar::new(a, sigma).unwrap();
        // stay where the density is comfortably inside f64 range
        let y = f * (a + 6.0 * sigma);
        let p = d.pdf(y);
        prop_assume!(p > 1e-280);
        prop_assert!((d.ln_pdf(y) - p.ln()).abs() <= 1e-10 * p.ln().abs().max(1.0));
    }

    #[test]
    fn mean_respects_the_triangle_bounds((a, sigma) in params()) {
        let d = Abar::new(a, sigma).unwrap();
        let mean = d.mean();
        // Jensen: E|Y| ≥ |E vector| = a; triangle: ≤ a + E|noise|.
        prop_assert!(mean >= a, "mean {mean} < a {a}");
        prop_assert!(
            mean <= a + MAXWELL_MEAN_COEFF * sigma * (1.0 + 1e-12),
            "mean {mean} exceeds a + 2*sqrt(2/pi)*sigma"
        );
    }

    #[test]
    fn variance_is_positive_and_bounded((a, sigma) in params()) {
        let d = Abar::new(a, sigma).unwrap();
        let var = d.variance();
        // the norm is a 1-Lipschitz function of the vector, so its
        // variance cannot exceed the vector's total variance 3σ²
        prop_assert!(var > 0.0, "variance {var} not positive");
        prop_assert!(var <= 3.0 * sigma * sigma * (1.0 + 1e-12));
    }

    #[test]
    fn mgf_dominates_the_jensen_bound((a, sigma) in params(), s in -1.0..0.5f64) {
        let d = Abar::new(a, sigma).unwrap();
        let mgf = d.mgf(s).unwrap();
        let jensen = (s * d.mean()).exp();
        prop_assert!(mgf >= jensen * (1.0 - 1e-10), "mgf({s}) = {mgf} < e^(s*mean) = {jensen}");
        prop_assert!((d.mgf(0.0).unwrap() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn squared_law_is_the_pushforward((a, sigma) in params(), f in 0.01..1.0f64) {
        let norm = Abar::new(a, sigma).unwrap();
        let plus = AbarPlus::new(a, sigma).unwrap();
        let r = f * (a + 6.0 * sigma);
        prop_assert!((plus.cdf(r * r) - norm.cdf(r)).abs() <= 1e-14);
        let expected = norm.pdf(r) / (2.0 * r);
        prop_assume!(expected > 1e-280);
        prop_assert!((plus.pdf(r * r) - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn sampling_is_deterministic_per_stream((a, sigma) in params(), seed in 0u64..1000) {
        let mean = MeanVector3::new(a, 0.0, 0.0);
        let one = sample_norm3(mean, sigma, 8, RandomStream::new(seed, 0)).unwrap();
        let two = sample_norm3(mean, sigma, 8, RandomStream::new(seed, 0)).unwrap();
        prop_assert_eq!(one.values(), two.values());

        let other = sample_norm3(mean, sigma, 8, RandomStream::new(seed, 1)).unwrap();
        prop_assert_ne!(one.values(), other.values());
        for &v in one.values() {
            prop_assert!(v > 0.0 && v.is_finite());
        }
    }
}
