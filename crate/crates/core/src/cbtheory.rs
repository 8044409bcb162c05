//! Checkers for the Cayley–Bacharach identity on a split reduced complete
//! intersection Γ ⊂ P^m and for the distance and MDS statements built on it.
//!
//! With degrees d₁..d_m and s = Σdᵢ − m − 1, the identity reads
//!
//! ```text
//! h⁰(I_Γ′(a)) − h⁰(I_Γ(a)) = h¹(I_Γ″(s − a))
//! ```
//!
//! for complementary Γ′, Γ″ ⊆ Γ and every a ≥ 0. Everything here reduces to
//! ranks of evaluation matrices restricted to subsets of Γ.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cohom::{hilbert_function, sigma, SubsetRanks};
use crate::error::{Error, Result};
use crate::evalcode::{build_code, min_distance};
use crate::gf::FieldSpec;
use crate::poly::Polynomial;
use crate::projgeom::{validate_ci, variety_points, CIValidation, PointSet};

/// A validated split smooth complete intersection.
#[derive(Clone, Debug)]
pub struct CISetup {
    pub gamma: PointSet,
    pub polys: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub s: i64,
}

impl CISetup {
    /// Cuts out Γ and refuses anything that is not split and smooth.
    pub fn new(polys: Vec<Polynomial>, m: usize, field: &FieldSpec) -> Result<Self> {
        let gamma = variety_points(&polys, m, field)?;
        let validation = validate_ci(&polys, &gamma)?;
        Self::from_validated(polys, gamma, validation)
    }

    pub fn from_validated(polys: Vec<Polynomial>, gamma: PointSet, validation: CIValidation) -> Result<Self> {
        if !validation.is_valid() {
            return Err(Error::NotCompleteIntersection(validation.to_string()));
        }
        let m = gamma.dim() as i64;
        let s = validation.degrees.iter().map(|&d| d as i64).sum::<i64>() - m - 1;
        Ok(Self { gamma, polys, degrees: validation.degrees, s })
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    pub fn field(&self) -> &FieldSpec {
        self.gamma.field()
    }
}

/// Hex bitmask of a subset, bit i set when point i is present; zero-padded
/// to a fixed width so string order matches numeric order.
pub fn subset_mask(idx: &[usize], n: usize) -> String {
    let width = n.div_ceil(4).max(1);
    let mut nibbles = vec![0u8; width];
    for &i in idx {
        nibbles[width - 1 - i / 4] |= 1 << (i % 4);
    }
    let hex: String = nibbles.iter().map(|&b| char::from_digit(b as u32, 16).unwrap()).collect();
    format!("0x{hex}")
}

fn complement(idx: &[usize], n: usize) -> Vec<usize> {
    let mut present = vec![false; n];
    for &i in idx {
        present[i] = true;
    }
    (0..n).filter(|&i| !present[i]).collect()
}

fn mask_indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Residual of Γ′ in Γ; for reduced point sets this is the complement.
pub fn residual(gamma: &PointSet, gamma_prime: &PointSet) -> Result<PointSet> {
    let idx = gamma.indices_of(gamma_prime)?;
    Ok(gamma.subset(&complement(&idx, gamma.len())))
}

fn identity_sides(cache: &SubsetRanks, s: i64, a: i64, idx: &[usize]) -> (usize, usize) {
    let n = cache.gamma().len();
    let all: Vec<usize> = (0..n).collect();
    let rest = complement(idx, n);
    let lhs = cache.h0(idx, a) - cache.h0(&all, a);
    let rhs = cache.h1(&rest, s - a);
    (lhs, rhs)
}

/// Both sides of the identity for one split Γ = Γ′ ∪ Γ″.
pub fn cb_identity(setup: &CISetup, a: i64, gamma_prime: &PointSet) -> Result<(usize, usize)> {
    if a < 0 {
        return Err(Error::DegreeOutOfRange { a, lo: 0, hi: i64::MAX });
    }
    let idx = setup.gamma.indices_of(gamma_prime)?;
    let cache = SubsetRanks::new(&setup.gamma, a.max(setup.s - a));
    Ok(identity_sides(&cache, setup.s, a, &idx))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub mask: String,
    pub subset: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBReport {
    pub a: i64,
    pub splits_checked: u64,
    pub violations: Vec<Violation>,
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

impl CBReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CBReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} splits={} exhaustive={} violations={}",
            self.a,
            self.splits_checked,
            self.exhaustive,
            self.violations.len()
        )?;
        for v in &self.violations {
            write!(f, "\nviolation mask={} lhs={} rhs={}", v.mask, v.lhs, v.rhs)?;
        }
        Ok(())
    }
}

/// Checks the identity on every split when 2^|Γ| ≤ `budget`; otherwise on
/// `budget` seeded random splits plus all splits with |Γ′| ∈ {0, 1, |Γ|−1, |Γ|}.
pub fn verify_cb_all(setup: &CISetup, a: i64, budget: u64, seed: u64) -> CBReport {
    let n = setup.n();
    let cache = SubsetRanks::new(&setup.gamma, a.max(setup.s - a));
    let check = |idx: Vec<usize>| -> Option<Violation> {
        let (lhs, rhs) = identity_sides(&cache, setup.s, a, &idx);
        (lhs != rhs).then(|| Violation { mask: subset_mask(&idx, n), subset: idx, lhs, rhs })
    };

    let exhaustive = n < 64 && (1u64 << n) <= budget;
    let (checked, mut violations, seed_used) = if exhaustive {
        let total = 1u64 << n;
        let v: Vec<Violation> =
            (0..total).into_par_iter().filter_map(|mask| check(mask_indices(mask, n))).collect();
        (total, v, None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut subsets: Vec<Vec<usize>> =
            (0..budget).map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect()).collect();
        let all: Vec<usize> = (0..n).collect();
        subsets.push(Vec::new());
        subsets.push(all.clone());
        for i in 0..n {
            subsets.push(vec![i]);
            subsets.push(all.iter().copied().filter(|&j| j != i).collect());
        }
        let total = subsets.len() as u64;
        let v: Vec<Violation> = subsets.into_par_iter().filter_map(check).collect();
        (total, v, Some(seed))
    };
    violations.sort_by(|x, y| x.mask.cmp(&y.mask));
    violations.dedup_by(|x, y| x.mask == y.mask);
    CBReport { a, splits_checked: checked, violations, exhaustive, seed: seed_used }
}

/// Puncturing C(Γ)_a down to any Γ′ with |Γ′| = |Γ| − (s − a + 1) is injective,
/// i.e. h⁰(I_Γ′(a)) = h⁰(I_Γ(a)) for every such Γ′.
pub fn verify_projection_injectivity(setup: &CISetup, a: i64) -> bool {
    let n = setup.n() as i64;
    let size = n - (setup.s - a + 1);
    if size > n {
        return true;
    }
    let size = size.max(0) as usize;
    let cache = SubsetRanks::new(&setup.gamma, a);
    let all: Vec<usize> = (0..setup.n()).collect();
    let target = cache.h0(&all, a);
    let combos: Vec<Vec<usize>> = (0..setup.n()).combinations(size).collect();
    combos.par_iter().all(|idx| cache.h0(idx, a) == target)
}

/// The lower bound s − a + 2, valid for 1 ≤ a ≤ s.
pub fn distance_bound(setup: &CISetup, a: i64) -> Result<i64> {
    if a < 1 || a > setup.s {
        return Err(Error::DegreeOutOfRange { a, lo: 1, hi: setup.s });
    }
    Ok(setup.s - a + 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub a: i64,
    pub n: usize,
    pub k: usize,
    pub d_exact: usize,
    /// `None` outside 1 ≤ a ≤ s.
    pub bound: Option<i64>,
    pub singleton: usize,
    pub mds: bool,
    pub mds_sufficient: bool,
    pub scanned: u128,
}

impl BoundReport {
    pub fn bound_holds(&self) -> bool {
        self.bound.is_none_or(|b| self.d_exact as i64 >= b)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = self.bound.map_or("none".to_string(), |b| b.to_string());
        write!(
            f,
            "n={} k={} d={} bound={} singleton={} mds={} mds_sufficient={}",
            self.n, self.k, self.d_exact, bound, self.singleton, self.mds, self.mds_sufficient
        )
    }
}

/// Exact parameters of C(Γ)_a next to the bound, without the degree range check.
pub fn bound_report(setup: &CISetup, a: i64, cap: u128) -> Result<BoundReport> {
    let code = build_code(&setup.gamma, a, None)?;
    let dist = min_distance(&code, cap)?;
    let h1 = setup.n() - code.k;
    let singleton = code.singleton();
    Ok(BoundReport {
        a,
        n: code.n,
        k: code.k,
        d_exact: dist.d,
        bound: distance_bound(setup, a).ok(),
        singleton,
        mds: dist.d == singleton,
        mds_sufficient: setup.s - a >= h1 as i64 - 1,
        scanned: dist.codewords_scanned,
    })
}

pub fn verify_main_theorem(setup: &CISetup, a: i64, cap: u128) -> Result<BoundReport> {
    distance_bound(setup, a)?;
    bound_report(setup, a, cap)
}

/// rank(e_a) + rank(e_{s−a}) = |Γ| for a in [−1, s+1].
pub fn verify_symmetry(setup: &CISetup) -> bool {
    let n = setup.n();
    let ranks: Vec<usize> = (-1..=setup.s + 1).map(|a| hilbert_function(&setup.gamma, a)).collect();
    let rank = |a: i64| ranks[(a + 1) as usize];
    (-1..=setup.s + 1).all(|a| rank(a) + rank(setup.s - a) == n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsCorollaryReport {
    pub a: i64,
    /// h¹(I_Γ(a)), the size of the tested residual subsets.
    pub h1: usize,
    pub mds: bool,
    /// h¹(I_Γ″(s − a)) = 0 for every Γ″ of that size.
    pub vanishing: bool,
    /// First subset (in combination order) where h¹ does not vanish.
    pub witness: Option<Vec<usize>>,
    pub subsets_checked: u64,
}

impl MdsCorollaryReport {
    pub fn agrees(&self) -> bool {
        self.mds == self.vanishing
    }
}

/// Compares exact MDS status of C(Γ)_a with the vanishing criterion.
pub fn verify_mds_corollary(setup: &CISetup, a: i64, cap: u128) -> Result<MdsCorollaryReport> {
    let code = build_code(&setup.gamma, a, None)?;
    let d = min_distance(&code, cap)?.d;
    let mds = d == code.singleton();
    let h1 = setup.n() - code.k;
    let j = setup.s - a;
    let cache = SubsetRanks::new(&setup.gamma, j);
    let combos: Vec<Vec<usize>> = (0..setup.n()).combinations(h1).collect();
    let witness = combos.par_iter().find_first(|idx| cache.h1(idx, j) != 0).cloned();
    Ok(MdsCorollaryReport {
        a,
        h1,
        mds,
        vanishing: witness.is_none(),
        witness,
        subsets_checked: combos.len() as u64,
    })
}

/// Whether dropping any single point leaves the degree-σ_Γ forms vanishing
/// on the rest unchanged. Sets with σ_Γ = −1 are trivially Cayley–Bacharach.
pub fn is_cb_scheme(gamma: &PointSet) -> bool {
    let sig = sigma(gamma);
    if sig < 0 {
        return true;
    }
    let n = gamma.len();
    let cache = SubsetRanks::new(gamma, sig);
    let all: Vec<usize> = (0..n).collect();
    let target = cache.h0(&all, sig);
    (0..n).all(|drop| {
        let rest: Vec<usize> = all.iter().copied().filter(|&i| i != drop).collect();
        cache.h0(&rest, sig) == target
    })
}
