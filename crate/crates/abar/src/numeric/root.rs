//! Bracketed scalar root-finding: safeguarded secant steps with a
//! bisection fallback, so convergence is guaranteed on any continuous
//! sign-changing bracket without derivatives.

use super::Tolerance;

/// Failure modes of [`find_root_bracketed`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    /// `f` has the same sign at both endpoints — no root is bracketed.
    #[error("invalid bracket: f({lo:e}) = {f_lo:e} and f({hi:e}) = {f_hi:e} have the same sign")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    /// `f` returned NaN or ±∞ inside the bracket.
    #[error("function evaluated to a non-finite value at x = {x:e}")]
    NonFiniteEvaluation { x: f64, value: f64 },
}

/// Hard iteration cap; bisection alone would shrink any double-precision
/// bracket to machine resolution well within this.
const MAX_ITERATIONS: usize = 200;

/// Finds `x ∈ [lo, hi]` with `f(x) = 0`, given `f(lo)` and `f(hi)` of
/// opposite sign, stopping when the bracket width falls below
/// `max(tol.abs, tol.rel·|x|)` (or an evaluation hits exactly zero).
///
/// Each iteration tries a secant step through the current bracket
/// endpoints; if the proposed point leaves the bracket interior or fails
/// to shrink it meaningfully, the step falls back to the midpoint. The
/// returned point therefore never leaves the initial bracket.
pub fn find_root_bracketed<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: Tolerance,
) -> Result<f64, RootError> {
    assert!(
        lo.is_finite() && hi.is_finite() && lo < hi,
        "bracket must be finite with lo < hi (got [{lo}, {hi}])"
    );

    let eval = |x: f64| -> Result<f64, RootError> {
        let value = f(x);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(RootError::NonFiniteEvaluation { x, value })
        }
    };

    let mut a = lo;
    let mut b = hi;
    let mut fa = eval(a)?;
    let mut fb = eval(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(RootError::InvalidBracket { lo, hi, f_lo: fa, f_hi: fb });
    }

    // Consecutive updates to the same endpoint signal secant stagnation
    // (the other endpoint stuck on a convex arc); force a bisection then,
    // which guarantees geometric bracket shrinkage overall.
    let mut same_side_updates = 0u32;
    let mut last_side_was_low = false;
    for _ in 0..MAX_ITERATIONS {
        let width = b - a;
        let mid = 0.5 * (a + b);
        if width <= tol.bound_for(mid) {
            return Ok(mid);
        }

        // Secant proposal through the bracket endpoints; accepted only if
        // it lands strictly inside with a safety margin and the secant has
        // not been feeding the same endpoint repeatedly.
        let secant = b - fb * (b - a) / (fb - fa);
        let margin = 0.01 * width;
        let x = if same_side_updates < 2
            && secant.is_finite()
            && secant > a + margin
            && secant < b - margin
        {
            secant
        } else {
            mid
        };

        let fx = eval(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        let low_side = fx.signum() == fa.signum();
        if low_side {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if low_side == last_side_was_low {
            same_side_updates += 1;
        } else {
            same_side_updates = 1;
        }
        last_side_was_low = low_side;
    }
    // The cap is effectively unreachable for meetable tolerances; return
    // the best midpoint rather than failing on pathological requests
    // (e.g. rel-only tolerance with the root at exactly zero).
    Ok(0.5 * (a + b))
}
