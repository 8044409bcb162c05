#![allow(dead_code)]

use cicodes::cbtheory::CISetup;
use cicodes::families;
use cicodes::{FieldSpec, Polynomial};

pub fn ci(src: &[&str], m: usize, q: u32) -> CISetup {
    let f = FieldSpec::with_order(q).unwrap();
    let polys = src.iter().map(|s| Polynomial::parse(s, m, &f).unwrap()).collect();
    CISetup::new(polys, m, &f).unwrap()
}

pub fn conics_f5() -> CISetup {
    ci(&["x1^2 - x0^2", "x2^2 - x0^2"], 2, 5)
}

pub fn rm(q: u32, m: usize) -> CISetup {
    families::reed_muller_ci(q, m).unwrap().setup().unwrap()
}

pub fn rs(q: u32, m: usize) -> CISetup {
    families::extended_rs(q, m).unwrap().setup().unwrap()
}

pub fn hermitian(q: u32) -> CISetup {
    families::hermitian_ci(q).unwrap().setup().unwrap()
}

/// Split smooth complete intersections small enough for exhaustive work,
/// covering m = 1, 2, 3.
pub fn corpus() -> Vec<(&'static str, CISetup)> {
    vec![
        ("rs q=5 m=1", rs(5, 1)),
        ("rs q=7 m=2", rs(7, 2)),
        ("rs q=5 m=3", rs(5, 3)),
        ("two conics F5", conics_f5()),
        ("conic+cubic F7", ci(&["x1^2 - x0^2", "x2^3 - x0^2*x2"], 2, 7)),
        ("rm q=3 m=2", rm(3, 2)),
        ("rm q=2 m=3", rm(2, 3)),
        ("three quadrics F3", ci(&["x1^2 - x0^2", "x2^2 - x0^2", "x3^2 - x0^2"], 3, 3)),
        ("hermitian q=2", hermitian(2)),
    ]
}
