//! Rational points of P^m over F_q and the zero loci of homogeneous forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// Upper bound on |P^m(F_q)| for enumeration.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// A point of P^m whose first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint(Vec<Elem>);

impl ProjPoint {
    /// Scales `coords` to the canonical representative; `None` for the zero vector.
    pub fn normalize(field: &FieldSpec, coords: &[Elem]) -> Option<ProjPoint> {
        let lead = *coords.iter().find(|&&x| x != 0)?;
        let inv = field.inv_nonzero(lead);
        Some(ProjPoint(coords.iter().map(|&x| field.mul(x, inv)).collect()))
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of points of P^m(F_q).
pub fn projective_size(m: usize, q: u32) -> u128 {
    let q = q as u128;
    (0..=m as u32).map(|i| q.pow(i)).sum()
}

/// Iterates P^m(F_q) in ascending lexicographic order of normalized coordinates.
pub struct ProjectiveIter {
    q: u32,
    lead: Option<usize>,
    cur: Vec<Elem>,
}

impl ProjectiveIter {
    pub fn new(m: usize, q: u32) -> Self {
        let mut cur = vec![0; m + 1];
        cur[m] = 1;
        Self { q, lead: Some(m), cur }
    }
}

impl Iterator for ProjectiveIter {
    type Item = ProjPoint;

    fn next(&mut self) -> Option<ProjPoint> {
        let lead = self.lead?;
        let out = ProjPoint(self.cur.clone());
        // odometer over the coordinates after the leading 1
        let mut i = self.cur.len();
        loop {
            i -= 1;
            if i == lead {
                // tail exhausted: move the leading 1 one place left
                self.cur.iter_mut().for_each(|x| *x = 0);
                if lead == 0 {
                    self.lead = None;
                } else {
                    self.lead = Some(lead - 1);
                    self.cur[lead - 1] = 1;
                }
                break;
            }
            self.cur[i] += 1;
            if self.cur[i] < self.q {
                break;
            }
            self.cur[i] = 0;
        }
        Some(out)
    }
}

/// An ordered set of distinct normalized points: Γ and its subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<ProjPoint>,
    m: usize,
    field: FieldSpec,
}

impl PointSet {
    /// Normalizes, sorts into enumeration order and drops repeats.
    pub fn new(field: &FieldSpec, m: usize, coords: impl IntoIterator<Item = Vec<Elem>>) -> Result<Self> {
        let mut points = Vec::new();
        for c in coords {
            if c.len() != m + 1 {
                return Err(Error::ArityMismatch { expected: m + 1, got: c.len() });
            }
            for &x in &c {
                field.elem(x)?;
            }
            let p = ProjPoint::normalize(field, &c).ok_or(Error::ZeroPoint)?;
            points.push(p);
        }
        points.sort();
        points.dedup();
        Ok(Self { points, m, field: field.clone() })
    }

    pub fn empty(field: &FieldSpec, m: usize) -> Self {
        Self { points: Vec::new(), m, field: field.clone() }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Ambient dimension m.
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// The points at the given (ascending or not) indices.
    pub fn subset(&self, idx: &[usize]) -> PointSet {
        let mut points: Vec<ProjPoint> = idx.iter().map(|&i| self.points[i].clone()).collect();
        points.sort();
        points.dedup();
        PointSet { points, m: self.m, field: self.field.clone() }
    }

    /// Positions of `other`'s points inside `self`.
    pub fn indices_of(&self, other: &PointSet) -> Result<Vec<usize>> {
        if other.field != self.field || other.m != self.m {
            return Err(Error::NotASubset);
        }
        other.points.iter().map(|p| self.index_of(p).ok_or(Error::NotASubset)).collect()
    }
}

pub fn enumerate_projective(m: usize, field: &FieldSpec) -> Result<PointSet> {
    let count = projective_size(m, field.q());
    if count > ENUMERATION_LIMIT {
        return Err(Error::SpaceTooLarge { count, limit: ENUMERATION_LIMIT });
    }
    Ok(PointSet { points: ProjectiveIter::new(m, field.q()).collect(), m, field: field.clone() })
}

fn check_forms(polys: &[Polynomial], m: usize, field: &FieldSpec) -> Result<()> {
    for p in polys {
        if p.field() != field {
            return Err(Error::FieldMismatch);
        }
        if p.num_vars() != m + 1 {
            return Err(Error::ArityMismatch { expected: m + 1, got: p.num_vars() });
        }
        if !p.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
    }
    Ok(())
}

/// Common zeros of homogeneous forms in P^m(F_q).
pub fn variety_points(polys: &[Polynomial], m: usize, field: &FieldSpec) -> Result<PointSet> {
    check_forms(polys, m, field)?;
    let count = projective_size(m, field.q());
    if count > ENUMERATION_LIMIT {
        return Err(Error::SpaceTooLarge { count, limit: ENUMERATION_LIMIT });
    }
    let points = ProjectiveIter::new(m, field.q())
        .filter(|pt| polys.iter().all(|f| f.eval_unchecked(pt.coords()) == 0))
        .collect();
    Ok(PointSet { points, m, field: field.clone() })
}

/// Outcome of the split / smooth complete-intersection checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIValidation {
    pub degrees: Vec<u32>,
    pub expected: u64,
    pub found: usize,
    pub split: bool,
    pub smooth: bool,
}

impl CIValidation {
    pub fn is_valid(&self) -> bool {
        self.split && self.smooth
    }
}

impl fmt::Display for CIValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected={} found={} split={} smooth={}",
            self.expected, self.found, self.split, self.smooth
        )
    }
}

/// Checks that `pts` is the zero set of exactly m forms, has ∏dᵢ points,
/// and that the Jacobian has rank m at each of them.
pub fn validate_ci(polys: &[Polynomial], pts: &PointSet) -> Result<CIValidation> {
    let m = pts.dim();
    if polys.len() != m {
        return Err(Error::WrongCount { expected: m, got: polys.len() });
    }
    check_forms(polys, m, pts.field())?;
    let degrees = polys
        .iter()
        .map(|p| p.degree().ok_or_else(|| Error::NotCompleteIntersection("zero polynomial".into())))
        .collect::<Result<Vec<u32>>>()?;
    let expected: u64 = degrees.iter().map(|&d| d as u64).product();
    let found = pts.len();

    let jacobian: Vec<Vec<Polynomial>> =
        polys.iter().map(|p| (0..=m).map(|v| p.partial_derivative(v)).collect()).collect();
    let smooth = pts.points().iter().all(|pt| {
        let rows = jacobian
            .iter()
            .map(|row| row.iter().map(|d| d.eval_unchecked(pt.coords())).collect())
            .collect();
        Matrix::from_rows(pts.field(), rows).rank() == m
    });

    Ok(CIValidation { degrees, expected, found, split: found as u64 == expected, smooth })
}
