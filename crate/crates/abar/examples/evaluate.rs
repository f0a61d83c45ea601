//! Evaluating the norm distribution and its squared companion:
//! densities, tails, quantiles, moments, and the moment generating
//! function, including the numerically delicate regimes.
//!
//! Run with: `cargo run --example evaluate`

use abar::{Abar, AbarPlus, DistError};

fn main() -> Result<(), DistError> {
    // A mean vector of norm 5 with per-component standard deviation 2.
    let d = Abar::new(5.0, 2.0)?;

    println!("norm law with a = {}, sigma = {}", d.a(), d.sigma());
    println!("  pdf(5)        = {:.16e}", d.pdf(5.0));
    println!("  ln_pdf(5)     = {:.16e}", d.ln_pdf(5.0));
    println!("  cdf(5)        = {:.16e}", d.cdf(5.0));
    println!("  survival(5)   = {:.16e}", d.survival(5.0));
    println!("  mean          = {:.16e}", d.mean());
    println!("  E[Y^2]        = {:.16e}  (closed form 3sigma^2 + a^2)", d.raw_moment2());
    println!("  variance      = {:.16e}", d.variance());

    // Quantiles invert the CDF to near machine precision.
    let median = d.quantile(0.5)?;
    println!("  median        = {:.16e}", median);
    println!("  cdf(median)   = {:.16e}  (round trip)", d.cdf(median));

    // The MGF is finite for every real s; negative s probes the Laplace
    // transform side.
    for s in [-1.0, -0.1, 0.5] {
        println!("  mgf({s:>4})    = {:.16e}", d.mgf(s)?);
    }

    // Far enough out, exp(s(a + s sigma^2/2)) exceeds f64 range; the
    // library reports which term overflowed instead of returning inf.
    match Abar::new(0.1, 10.0)?.mgf(10.0) {
        Err(e) => println!("  mgf overflow  -> {e}"),
        Ok(v) => println!("  unexpected finite mgf: {v}"),
    }

    // a = 0 is the Maxwell special case, handled exactly.
    let maxwell = Abar::new(0.0, 1.0)?;
    println!("\nMaxwell case (a = 0, sigma = 1)");
    println!("  pdf(1)  = {:.16e}", maxwell.pdf(1.0));
    println!("  mean    = {:.16e}  (analytic 2 sqrt(2/pi) sigma)", maxwell.mean());

    // At huge a/sigma the law approaches N(a, sigma^2); the dedicated
    // limit form lets you see the agreement directly.
    let ridge = Abar::new(1.0e8, 1.0)?;
    println!("\nGaussian regime (a = 1e8, sigma = 1)");
    println!("  pdf(a)           = {:.16e}", ridge.pdf(1.0e8));
    println!("  gaussian form    = {:.16e}", ridge.gaussian_limit_pdf(1.0e8));

    // The squared norm shares everything through the push-forward.
    let plus = AbarPlus::new(5.0, 2.0)?;
    println!("\nsquared-norm law with the same parameters");
    println!("  pdf(25)     = {:.16e}", plus.pdf(25.0));
    println!("  cdf(25)     = {:.16e}  (equals cdf(5) above)", plus.cdf(25.0));
    println!("  mean        = {:.16e}  (equals E[Y^2] above)", plus.mean());
    println!("  median      = {:.16e}  (square of the norm median)", plus.quantile(0.5)?);

    Ok(())
}
