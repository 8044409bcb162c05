//! Build C(Γ)_a for the Reed-Muller point set A^2(F_3) and compute its
//! exact minimum distance and weight distribution.

use cicodes::evalcode::{build_code, choose_f0, min_distance, weight_distribution, DEFAULT_CAP};
use cicodes::families::{reed_muller_ci, rm_exact_distance};

fn main() -> cicodes::Result<()> {
    let setup = reed_muller_ci(3, 2)?.setup()?;
    for a in 1..=3 {
        let f0 = choose_f0(&setup.gamma, a)?;
        let code = build_code(&setup.gamma, a, Some(&f0))?;
        let dist = min_distance(&code, DEFAULT_CAP)?;
        println!("a={a} f0={f0} n={} k={} {dist} (closed form {})", code.n, code.k, rm_exact_distance(3, 2, a)?);

        let weights = weight_distribution(&code, DEFAULT_CAP)?;
        let nonzero: Vec<String> =
            weights.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, c)| format!("{w}:{c}")).collect();
        println!("  weights {}", nonzero.join(" "));
    }

    let code = build_code(&setup.gamma, 3, None)?;
    println!("generator matrix of C(Γ)_3:\n{}", code.gen);
    Ok(())
}
