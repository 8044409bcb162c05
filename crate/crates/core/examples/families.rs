//! The three built-in families: variety files and code parameters at degree s.

use cicodes::cbtheory::bound_report;
use cicodes::evalcode::DEFAULT_CAP;
use cicodes::families::{build, FamilyKind};

fn main() -> cicodes::Result<()> {
    for (kind, q, m) in [(FamilyKind::ExtendedRs, 7, 2), (FamilyKind::ReedMuller, 3, 2), (FamilyKind::Hermitian, 2, 2)] {
        let fam = build(kind, q, m)?;
        println!("# {kind} q={q} m={m} s={}", fam.spec.s());
        print!("{}", fam.variety_file());
        let setup = fam.setup()?;
        println!("{}\n", bound_report(&setup, setup.s, DEFAULT_CAP)?);
    }
    Ok(())
}
