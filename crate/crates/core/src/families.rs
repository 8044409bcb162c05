//! Complete intersections behind three classical code families.
//!
//! - extended Reed–Solomon: the hyperplanes x₁, …, x_{m−1} and x_m^q − x₀^{q−1}x_m,
//!   which cut out the q affine points of a line;
//! - Reed–Muller: the binomials x_j^q − x₀^{q−1}x_j, cutting out all of A^m(F_q);
//! - Hermitian: over F_{q²}, the curve x₁^{q+1} − x₂^q x₀ − x₂x₀^q together with
//!   F = ∏ (x₂ − αx₀) over α with α^q + α ≠ 0, leaving the q³ − q curve
//!   points with x₁ ≠ 0.

use std::fmt;
use std::str::FromStr;

use crate::cbtheory::CISetup;
use crate::error::{Error, Result};
use crate::gf::{prime_power, FieldSpec};
use crate::poly::{Monomial, Polynomial};
use crate::variety::VarietyFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    ExtendedRs,
    ReedMuller,
    Hermitian,
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rs" | "extended_rs" | "extended-rs" => Ok(Self::ExtendedRs),
            "rm" | "reed_muller" | "reed-muller" => Ok(Self::ReedMuller),
            "hermitian" | "herm" => Ok(Self::Hermitian),
            other => Err(format!("unknown family `{other}` (expected rs, rm or hermitian)")),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExtendedRs => "extended_rs",
            Self::ReedMuller => "reed_muller",
            Self::Hermitian => "hermitian",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Field size q; the Hermitian code lives over F_{q²}.
    pub q_base: u32,
    pub m: usize,
    pub degrees: Vec<u32>,
}

impl FamilySpec {
    pub fn s(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).sum::<i64>() - self.m as i64 - 1
    }

    /// Number of points the family is expected to cut out.
    pub fn expected_points(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }
}

#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    pub field: FieldSpec,
    pub polys: Vec<Polynomial>,
}

impl Family {
    pub fn setup(&self) -> Result<CISetup> {
        CISetup::new(self.polys.clone(), self.spec.m, &self.field)
    }

    pub fn variety_file(&self) -> VarietyFile {
        VarietyFile { field: self.field.clone(), m: self.spec.m, polys: self.polys.clone() }
    }
}

pub fn build(kind: FamilyKind, q: u32, m: usize) -> Result<Family> {
    match kind {
        FamilyKind::ExtendedRs => extended_rs(q, m),
        FamilyKind::ReedMuller => reed_muller_ci(q, m),
        FamilyKind::Hermitian => hermitian_ci(q),
    }
}

fn mono(num_vars: usize, exps: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0; num_vars];
    for &(i, x) in exps {
        e[i] += x;
    }
    Monomial::new(e)
}

/// x_j^q − x₀^{q−1} x_j
fn affine_binomial(field: &FieldSpec, num_vars: usize, j: usize) -> Polynomial {
    let q = field.q();
    Polynomial::from_terms(
        field,
        num_vars,
        [(mono(num_vars, &[(j, q)]), 1), (mono(num_vars, &[(0, q - 1), (j, 1)]), field.neg(1))],
    )
    .expect("valid terms")
}

fn check_dim(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::DegreeOutOfRange { a: 0, lo: 1, hi: i64::MAX });
    }
    Ok(())
}

pub fn extended_rs(q: u32, m: usize) -> Result<Family> {
    check_dim(m)?;
    let field = FieldSpec::with_order(q)?;
    let nv = m + 1;
    let mut polys: Vec<Polynomial> = (1..m).map(|j| Polynomial::var(&field, nv, j)).collect();
    polys.push(affine_binomial(&field, nv, m));
    let mut degrees = vec![1; m - 1];
    degrees.push(q);
    Ok(Family { spec: FamilySpec { kind: FamilyKind::ExtendedRs, q_base: q, m, degrees }, field, polys })
}

pub fn reed_muller_ci(q: u32, m: usize) -> Result<Family> {
    check_dim(m)?;
    let field = FieldSpec::with_order(q)?;
    let polys = (1..=m).map(|j| affine_binomial(&field, m + 1, j)).collect();
    Ok(Family {
        spec: FamilySpec { kind: FamilyKind::ReedMuller, q_base: q, m, degrees: vec![q; m] },
        field,
        polys,
    })
}

/// The product polynomial F over F_{q²} together with its number of factors.
pub fn hermitian_product(field: &FieldSpec, q: u32) -> (Polynomial, usize) {
    let x2 = Polynomial::var(field, 3, 2);
    let mut product = Polynomial::constant(field, 3, 1);
    let mut factors = 0;
    for alpha in field.elements() {
        if field.add(field.pow(alpha, q as u64), alpha) == 0 {
            continue;
        }
        let factor = x2.sub(&Polynomial::term(field, mono(3, &[(0, 1)]), alpha)).expect("same ring");
        product = product.multiply(&factor).expect("same ring");
        factors += 1;
    }
    (product, factors)
}

pub fn hermitian_ci(q: u32) -> Result<Family> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let field = FieldSpec::new(p, 2 * e, None)?;
    let minus = field.neg(1);
    let curve = Polynomial::from_terms(
        &field,
        3,
        [
            (mono(3, &[(1, q + 1)]), 1),
            (mono(3, &[(2, q), (0, 1)]), minus),
            (mono(3, &[(2, 1), (0, q)]), minus),
        ],
    )?;
    let (product, _) = hermitian_product(&field, q);
    Ok(Family {
        spec: FamilySpec { kind: FamilyKind::Hermitian, q_base: q, m: 2, degrees: vec![q + 1, q * q - q] },
        field,
        polys: vec![curve, product],
    })
}

/// Exact minimum distance (q − β)·q^{m−1−α} of the affine Reed–Muller code
/// of degree a = α(q−1) + β, 0 ≤ β ≤ q − 2.
pub fn rm_exact_distance(q: u32, m: usize, a: i64) -> Result<u64> {
    let top = m as i64 * (q as i64 - 1);
    if a < 0 || a > top {
        return Err(Error::DegreeOutOfRange { a, lo: 0, hi: top });
    }
    if a == top {
        return Ok(1);
    }
    let (alpha, beta) = (a / (q as i64 - 1), a % (q as i64 - 1));
    Ok((q as u64 - beta as u64) * (q as u64).pow((m as i64 - 1 - alpha) as u32))
}
