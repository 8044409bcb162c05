//! Rational points of two conics in P^2(F_5) and the complete intersection check.

use cicodes::projgeom::{validate_ci, variety_points};
use cicodes::{FieldSpec, Polynomial};

fn main() -> cicodes::Result<()> {
    let f5 = FieldSpec::prime(5)?;
    let polys = vec![Polynomial::parse("x1^2 - x0^2", 2, &f5)?, Polynomial::parse("x2^2 - x0^2", 2, &f5)?];

    let gamma = variety_points(&polys, 2, &f5)?;
    println!("points={}", gamma.len());
    for p in gamma.points() {
        println!("  {p}");
    }
    println!("{}", validate_ci(&polys, &gamma)?);
    Ok(())
}
