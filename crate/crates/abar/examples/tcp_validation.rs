//! Validating the norm law on spatial data: simulate a 3D Thomas cluster
//! process (Poisson parents, Gaussian-scattered daughters), then check
//! that each cluster's daughter-to-origin distances follow the norm
//! distribution with a = the parent's distance from the origin — first
//! with the bundled end-to-end validator, then by hand, including a
//! deliberately corrupted cluster to show the test has teeth.
//!
//! Run with: `cargo run --example tcp_validation`

use abar::tcp::{
    cluster_distance_samples, ks_statistic, validate_distance_law, TcpConfig,
};
use abar::numeric::RandomStream;
use abar::Abar;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    // Box [-6, 6]^3, ~35 expected parents, ~120 daughters each with
    // isotropic scatter sigma = 1.
    let cfg = TcpConfig::new(6.0, 0.02, 120.0, 1.0, 90_211, 0)?;
    println!(
        "expected parents in the box: {:.1}",
        cfg.expected_parents()
    );

    // KS-test the first 8 sufficiently large clusters at significance 0.01.
    let report = validate_distance_law(&cfg, 8)?;
    println!("\nvalidation report:\n{}", serde_json::to_string_pretty(&report)?);
    println!(
        "\n{} of {} clusters consistent with the norm law; overall pass = {}",
        report.clusters.iter().filter(|c| c.pass).count(),
        report.clusters.len(),
        report.overall_pass
    );

    // The same machinery by hand: daughters of one synthetic cluster at
    // center distance 5 with scatter 1.5 ...
    let mut distances =
        cluster_distance_samples(5.0, 1.5, 20_000, RandomStream::new(11, 0))?.into_values();
    distances.sort_by(f64::total_cmp);
    let law = Abar::new(5.0, 1.5)?;
    let ks = ks_statistic(&distances, |y| law.cdf(y))?;
    println!(
        "\nhealthy cluster:   D = {:.5} vs threshold {:.5} -> pass = {}",
        ks.statistic,
        ks.threshold,
        ks.passes()
    );
    assert!(ks.passes());

    // ... and the same cluster with every distance shifted by one scatter
    // standard deviation: an injected fault the test must catch.
    let shifted: Vec<f64> = distances.iter().map(|d| d + 1.5).collect();
    let ks_bad = ks_statistic(&shifted, |y| law.cdf(y))?;
    println!(
        "corrupted cluster: D = {:.5} vs threshold {:.5} -> pass = {}",
        ks_bad.statistic,
        ks_bad.threshold,
        ks_bad.passes()
    );
    assert!(!ks_bad.passes());

    Ok(())
}
