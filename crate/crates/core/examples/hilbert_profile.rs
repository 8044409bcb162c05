//! Hilbert function, h0/h1 table and sigma for a conic meeting a cubic in P^2(F_7).

use cicodes::cbtheory::{is_cb_scheme, verify_symmetry, CISetup};
use cicodes::cohom::CohomologyProfile;
use cicodes::{FieldSpec, Polynomial};

fn main() -> cicodes::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let polys = vec![Polynomial::parse("x1^2 - x0^2", 2, &f7)?, Polynomial::parse("x2^3 - x0^2*x2", 2, &f7)?];
    let setup = CISetup::new(polys, 2, &f7)?;

    print!("{}", CohomologyProfile::compute(&setup.gamma, setup.n() as i64));
    println!("s={}", setup.s);
    println!("symmetry={}", verify_symmetry(&setup));
    println!("cb_scheme={}", is_cb_scheme(&setup.gamma));
    Ok(())
}
