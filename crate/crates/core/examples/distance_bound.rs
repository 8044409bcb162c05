//! Exact distance of C(Γ)_a next to the bound s - a + 2 for every admissible a,
//! plus the MDS criterion through h1 of residual subsets.

use cicodes::cbtheory::{verify_main_theorem, verify_mds_corollary, CISetup};
use cicodes::evalcode::DEFAULT_CAP;
use cicodes::{FieldSpec, Polynomial};

fn main() -> cicodes::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let polys = ["x1^2 - x0^2", "x2^2 - x0^2", "x3^2 - x0^2"]
        .iter()
        .map(|s| Polynomial::parse(s, 3, &f3))
        .collect::<cicodes::Result<Vec<_>>>()?;
    let setup = CISetup::new(polys, 3, &f3)?;
    println!("three quadrics in P^3(F_3): n={} s={}", setup.n(), setup.s);

    for a in 1..=setup.s {
        let report = verify_main_theorem(&setup, a, DEFAULT_CAP)?;
        let mds = verify_mds_corollary(&setup, a, DEFAULT_CAP)?;
        println!(
            "a={a} {report} | h1={} vanishing={} agrees={}",
            mds.h1,
            mds.vanishing,
            mds.agrees()
        );
    }
    Ok(())
}
