//! Check h0(I_Γ'(a)) - h0(I_Γ(a)) = h1(I_Γ''(s-a)) over every split of the
//! Hermitian point set over F_4, and over sampled splits of a larger one.

use cicodes::cbtheory::{cb_identity, residual, verify_cb_all, verify_projection_injectivity};
use cicodes::families::hermitian_ci;

fn main() -> cicodes::Result<()> {
    let small = hermitian_ci(2)?.setup()?;
    println!("hermitian q=2: n={} s={}", small.n(), small.s);
    for a in 0..=small.s + 2 {
        println!("  {}", verify_cb_all(&small, a, 1 << 16, 0));
    }

    let first_three = small.gamma.subset(&[0, 1, 2]);
    let rest = residual(&small.gamma, &first_three)?;
    let (lhs, rhs) = cb_identity(&small, 1, &first_three)?;
    println!("  split {} + {} points at a=1: {lhs} = {rhs}", first_three.len(), rest.len());

    let large = hermitian_ci(3)?.setup()?;
    println!("hermitian q=3: n={} s={}", large.n(), large.s);
    for a in [2, 4, 6] {
        println!("  {}", verify_cb_all(&large, a, 2000, 42));
    }
    println!("  puncturing injective at a=6: {}", verify_projection_injectivity(&large, 6));
    Ok(())
}
