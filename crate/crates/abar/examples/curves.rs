//! Tabulating pdf/cdf/survival columns on a y-grid and writing the
//! result as a provenance-stamped CSV.
//!
//! Run with: `cargo run --example curves`

use abar::cli::{CurveError, CurveRequest, Family, Quantity};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    // 200 points of all three quantities for the norm law at (5, 2).
    let request = CurveRequest::new(
        Family::Abar,
        5.0,
        2.0,
        0.0,
        5.0 + 12.0 * 2.0, // essentially all of the mass
        200,
        vec![Quantity::Pdf, Quantity::Cdf, Quantity::Survival],
    )?;
    let curve = request.evaluate()?;

    let path = std::env::temp_dir().join("abar_curve_demo.csv");
    curve.write_csv(std::fs::File::create(&path)?)?;
    println!("wrote {} rows to {}", curve.rows().len(), path.display());

    // Show the shape of the table.
    println!("\ncolumns: {:?}", curve.columns());
    for row in curve.rows().iter().step_by(40) {
        println!(
            "  y = {:7.3}   pdf = {:.6e}   cdf = {:.6e}   survival = {:.6e}",
            row[0], row[1], row[2], row[3]
        );
    }

    // A quick numerical sanity check on the emitted data: the trapezoid
    // rule over the pdf column should come out very near 1.
    let rows = curve.rows();
    let mut mass = 0.0;
    for pair in rows.windows(2) {
        mass += 0.5 * (pair[1][0] - pair[0][0]) * (pair[1][1] + pair[0][1]);
    }
    println!("\ntrapezoid mass of the pdf column: {mass:.9}");

    // Requests are validated up front; a duplicate column is refused.
    let err = CurveRequest::new(
        Family::AbarPlus,
        5.0,
        2.0,
        0.0,
        10.0,
        50,
        vec![Quantity::Pdf, Quantity::Pdf],
    )
    .unwrap_err();
    assert!(matches!(err, CurveError::DuplicateQuantity { .. }));
    println!("duplicate-quantity request rejected as expected: {err}");

    Ok(())
}
