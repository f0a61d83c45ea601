//! Reproducing the bundled figure data: four CSV files of pdf curves
//! (norm and squared-norm families, one sweep over sigma at a = 5 and one
//! over a at sigma = 5), then verifying each emitted curve integrates
//! to 1 by the trapezoid rule.
//!
//! The CLI layer is embeddable, so this example drives the same code path
//! as `abar figures --out-dir ...` without spawning a process.
//!
//! Run with: `cargo run --example figures`

use std::collections::BTreeMap;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = std::env::temp_dir().join("abar_figures_demo");
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();

    let code = abar::cli::run(
        ["abar", "figures", "--out-dir", out_dir.to_str().unwrap()],
        &mut stdout,
        &mut stderr,
    );
    assert_eq!(code, 0, "figures command failed");

    // Each file is long-format CSV: a,sigma,y,pdf with one block per
    // swept parameter value. Group rows by (a, sigma) and integrate.
    for name in [
        "abar_pdf_a5.csv",
        "abar_pdf_sigma5.csv",
        "abar_plus_pdf_a5.csv",
        "abar_plus_pdf_sigma5.csv",
    ] {
        let text = std::fs::read_to_string(out_dir.join(name))?;
        let mut curves: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
        for line in text.lines() {
            if line.starts_with('#') || line.starts_with("a,") {
                continue;
            }
            let cells: Vec<&str> = line.split(',').collect();
            let key = format!("a={}, sigma={}", cells[0], cells[1]);
            curves
                .entry(key)
                .or_default()
                .push((cells[2].parse()?, cells[3].parse()?));
        }

        println!("{name}:");
        for (key, points) in curves {
            let mass: f64 = points
                .windows(2)
                .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[1].1 + w[0].1))
                .sum();
            println!("  {key:<22} trapezoid mass = {mass:.6}");
            assert!(
                (mass - 1.0).abs() < 1e-3,
                "curve {key} in {name} is not normalized: {mass}"
            );
        }
    }

    println!("\nall curves normalized; files live in {}", out_dir.display());
    Ok(())
}
