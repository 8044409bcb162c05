//! Arithmetic in F_9 built from the default modulus.

use cicodes::FieldSpec;

fn main() -> cicodes::Result<()> {
    let f = FieldSpec::new(3, 2, None)?;
    println!("{f}");

    let w = f.generator_w();
    let g = f.primitive();
    println!("w = {w}, primitive element = {g} (order {})", f.order(g)?);

    for x in f.elements() {
        let digits = f.digits(x);
        let inv = f.inv(x).map_or("-".to_string(), |y| y.to_string());
        println!("{x:>2}  digits={digits:?}  x^2={:>2}  x^-1={inv}", f.mul(x, x));
    }

    assert_eq!(f.div(1, 0), Err(cicodes::Error::DivisionByZero));
    Ok(())
}
