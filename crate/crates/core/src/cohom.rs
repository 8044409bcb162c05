//! h⁰ and h¹ of the ideal sheaf of a point set, read off the rank of e_a.
//!
//! For a ≥ 0, h⁰(I_Γ(a)) = dim R_a − rank e_a and h¹(I_Γ(a)) = |Γ| − rank e_a.
//! Negative degrees use R_a = 0: rank 0, h⁰ = 0, h¹ = |Γ|.

use std::fmt;

use crate::evalcode::{evaluation_matrix, EvalMatrix};
use crate::poly::dim_forms;
use crate::projgeom::PointSet;

/// rank e_a, i.e. the Hilbert function dim (R/I_Γ)_a.
pub fn hilbert_function(gamma: &PointSet, a: i64) -> usize {
    if a < 0 || gamma.is_empty() {
        return 0;
    }
    evaluation_matrix(gamma, a).rank()
}

pub fn h0(gamma: &PointSet, a: i64) -> usize {
    dim_forms(gamma.dim(), a) - hilbert_function(gamma, a)
}

pub fn h1(gamma: &PointSet, a: i64) -> usize {
    gamma.len() - hilbert_function(gamma, a)
}

pub fn imposes_independent_conditions(gamma: &PointSet, a: i64) -> bool {
    h1(gamma, a) == 0
}

/// Largest a with h¹(I_Γ(a)) ≠ 0; −1 when |Γ| ≤ 1.
///
/// h¹ is nonincreasing in a and vanishes from |Γ| − 1 on, so the scan runs
/// upward and stops at the first vanishing degree.
pub fn sigma(gamma: &PointSet) -> i64 {
    if gamma.len() <= 1 {
        return -1;
    }
    let top = gamma.len() as i64 - 1;
    (0..=top).find(|&a| h1(gamma, a) == 0).unwrap_or(top + 1) - 1
}

/// Evaluation matrices of Γ for a window of degrees, so that ranks of
/// subsets are row selections rather than fresh evaluations.
pub struct SubsetRanks {
    gamma: PointSet,
    matrices: Vec<EvalMatrix>,
}

impl SubsetRanks {
    /// Caches degrees `0..=a_max`.
    pub fn new(gamma: &PointSet, a_max: i64) -> Self {
        let matrices = (0..=a_max.max(-1)).map(|a| evaluation_matrix(gamma, a)).collect();
        Self { gamma: gamma.clone(), matrices }
    }

    pub fn gamma(&self) -> &PointSet {
        &self.gamma
    }

    /// rank of e_a restricted to the points at `idx`.
    pub fn rank(&self, idx: &[usize], a: i64) -> usize {
        if a < 0 || idx.is_empty() {
            return 0;
        }
        match self.matrices.get(a as usize) {
            Some(em) => em.matrix.select_rows(idx).rank(),
            None => evaluation_matrix(&self.gamma.subset(idx), a).rank(),
        }
    }

    pub fn h0(&self, idx: &[usize], a: i64) -> usize {
        dim_forms(self.gamma.dim(), a) - self.rank(idx, a)
    }

    pub fn h1(&self, idx: &[usize], a: i64) -> usize {
        idx.len() - self.rank(idx, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub a: i64,
    pub dim_ra: usize,
    pub rank: usize,
    pub h0: usize,
    pub h1: usize,
}

/// Table of dim R_a, rank, h⁰ and h¹ for a in [−1, a_max], plus σ_Γ.
#[derive(Clone, Debug)]
pub struct CohomologyProfile {
    pub gamma: PointSet,
    pub rows: Vec<ProfileRow>,
    pub sigma: i64,
}

impl CohomologyProfile {
    pub fn compute(gamma: &PointSet, a_max: i64) -> Self {
        let m = gamma.dim();
        let n = gamma.len();
        let rows = (-1..=a_max)
            .map(|a| {
                let rank = hilbert_function(gamma, a);
                let dim_ra = dim_forms(m, a);
                ProfileRow { a, dim_ra, rank, h0: dim_ra - rank, h1: n - rank }
            })
            .collect::<Vec<_>>();
        let sigma = if n <= 1 {
            -1
        } else {
            match rows.iter().find(|r| r.a >= 0 && r.h1 == 0) {
                Some(r) => r.a - 1,
                None => sigma(gamma),
            }
        };
        Self { gamma: gamma.clone(), rows, sigma }
    }

    pub fn row(&self, a: i64) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.a == a)
    }
}

impl fmt::Display for CohomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4} {:>8} {:>6} {:>6} {:>6}", "a", "dimRa", "rank", "h0", "h1")?;
        for r in &self.rows {
            writeln!(f, "{:>4} {:>8} {:>6} {:>6} {:>6}", r.a, r.dim_ra, r.rank, r.h0, r.h1)?;
        }
        writeln!(f, "sigma={}", self.sigma)
    }
}
