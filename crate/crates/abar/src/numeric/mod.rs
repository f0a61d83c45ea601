//! Foundational numerics shared by every other module: error functions,
//! adaptive quadrature, bracketed root-finding, and the reproducible
//! random-stream contract.

mod erf;
mod quad;
mod rng;
mod root;

pub use erf::{erf, erfc, erfcx};
pub use quad::{integrate_adaptive, QuadError, Quadrature};
pub use rng::RandomStream;
pub use root::{find_root_bracketed, RootError};

/// √(2π), the ubiquitous Gaussian normalization constant.
pub(crate) const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
/// √(2/π).
pub(crate) const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;
/// √π (used by the series/asymptotic oracles in tests).
#[cfg(test)]
pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;
/// √2.
pub(crate) const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Mixed absolute/relative tolerance: a computed quantity `v` with error
/// estimate `e` is accepted when `e ≤ max(abs, rel·|v|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative tolerance (dimensionless, ≥ 0).
    pub rel: f64,
    /// Absolute tolerance (units of the measured quantity, ≥ 0).
    pub abs: f64,
}

impl Tolerance {
    /// Builds a tolerance; panics if either part is negative/non-finite or
    /// both are zero (a zero-zero tolerance can never be met).
    pub fn new(rel: f64, abs: f64) -> Self {
        assert!(
            rel.is_finite() && abs.is_finite() && rel >= 0.0 && abs >= 0.0,
            "tolerance parts must be finite and non-negative (rel={rel}, abs={abs})"
        );
        assert!(rel > 0.0 || abs > 0.0, "tolerance cannot be zero in both parts");
        Self { rel, abs }
    }

    /// The acceptance bound for a quantity of magnitude `|scale|`.
    #[inline]
    pub fn bound_for(&self, scale: f64) -> f64 {
        f64::max(self.abs, self.rel * scale.abs())
    }
}
