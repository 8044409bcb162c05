//! Evaluation codes C(Γ)_a: the image of the degree-a evaluation map on Γ.
//!
//! Parameters are computed from the unnormalized image by default. Dividing
//! by a normalizer f₀ rescales each coordinate by a nonzero constant, which
//! leaves the rank and every codeword weight unchanged.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::linalg::Matrix;
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::projgeom::PointSet;

pub const DEFAULT_CAP: u128 = 1 << 22;
pub const NORMALIZER_TRIALS: usize = 10_000;

/// Matrix of e_a: row i holds the degree-a monomials evaluated at pᵢ.
#[derive(Clone, Debug)]
pub struct EvalMatrix {
    pub matrix: Matrix,
    pub degree: i64,
    pub monomials: Vec<Monomial>,
}

impl EvalMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Evaluation matrix for arbitrary (not necessarily normalized) coordinate rows.
pub fn evaluation_matrix_from_coords(field: &FieldSpec, m: usize, coords: &[Vec<Elem>], a: i64) -> EvalMatrix {
    let monomials = monomials_of_degree(m, a);
    let mut matrix = Matrix::zeros(field, coords.len(), monomials.len());
    if a >= 0 {
        for (i, pt) in coords.iter().enumerate() {
            // powers[v][e] = x_v^e
            let powers: Vec<Vec<Elem>> = pt
                .iter()
                .map(|&x| {
                    let mut row = Vec::with_capacity(a as usize + 1);
                    let mut acc = 1;
                    for _ in 0..=a {
                        row.push(acc);
                        acc = field.mul(acc, x);
                    }
                    row
                })
                .collect();
            for (j, mono) in monomials.iter().enumerate() {
                let v = mono
                    .exponents()
                    .iter()
                    .enumerate()
                    .fold(1, |acc, (var, &e)| field.mul(acc, powers[var][e as usize]));
                matrix.set(i, j, v);
            }
        }
    }
    EvalMatrix { matrix, degree: a, monomials }
}

pub fn evaluation_matrix(gamma: &PointSet, a: i64) -> EvalMatrix {
    let coords: Vec<Vec<Elem>> = gamma.points().iter().map(|p| p.coords().to_vec()).collect();
    evaluation_matrix_from_coords(gamma.field(), gamma.dim(), &coords, a)
}

/// Rank of e_a and a basis of its kernel, the coefficient vectors of (I_Γ)_a.
pub fn rank_and_kernel(m: &EvalMatrix) -> (usize, Vec<Vec<Elem>>) {
    let kernel = m.matrix.kernel();
    (m.monomials.len() - kernel.len(), kernel)
}

/// Turns a coefficient vector over the monomial basis into a polynomial.
pub fn coefficients_to_polynomial(field: &FieldSpec, monomials: &[Monomial], coeffs: &[Elem]) -> Polynomial {
    let num_vars = monomials.first().map_or(1, Monomial::num_vars);
    Polynomial::from_terms(field, num_vars, monomials.iter().cloned().zip(coeffs.iter().copied()))
        .expect("monomials share one arity")
}

/// A form of degree a that is nonzero at every point of Γ: x₀^a when Γ is
/// affine, otherwise a seeded random search.
pub fn choose_f0(gamma: &PointSet, a: i64) -> Result<Polynomial> {
    choose_f0_seeded(gamma, a, 0, NORMALIZER_TRIALS)
}

pub fn choose_f0_seeded(gamma: &PointSet, a: i64, seed: u64, trials: usize) -> Result<Polynomial> {
    if a < 0 {
        return Err(Error::DegreeOutOfRange { a, lo: 0, hi: i64::MAX });
    }
    let field = gamma.field();
    let nv = gamma.dim() + 1;
    let mut x0 = vec![0; nv];
    x0[0] = a as u32;
    if gamma.points().iter().all(|p| p.coords()[0] != 0) {
        return Ok(Polynomial::term(field, Monomial::new(x0), 1));
    }
    let em = evaluation_matrix(gamma, a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Elem> = (0..em.monomials.len()).map(|_| rng.gen_range(0..field.q())).collect();
        if em.matrix.mul_vec(&coeffs).iter().all(|&v| v != 0) {
            return Ok(coefficients_to_polynomial(field, &em.monomials, &coeffs));
        }
    }
    Err(Error::NoNormalizerFound { trials })
}

/// The code C(Γ)_a with a generator matrix in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct EvalCode {
    pub gamma: PointSet,
    pub degree: i64,
    pub n: usize,
    pub k: usize,
    pub gen: Matrix,
    pub f0: Option<Polynomial>,
}

impl EvalCode {
    pub fn field(&self) -> &FieldSpec {
        self.gen.field()
    }

    pub fn singleton(&self) -> usize {
        self.n + 1 - self.k
    }

    /// Codeword for message `msg` (length k) under the generator matrix.
    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        assert_eq!(msg.len(), self.k);
        let f = self.field();
        let mut out = vec![0; self.n];
        for (r, &c) in msg.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.gen.row(r)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// The word (f(p₁)/f₀(p₁), …) for a form f of degree a, or the raw
    /// evaluations when no normalizer is attached.
    pub fn word_of(&self, f: &Polynomial) -> Result<Vec<Elem>> {
        let field = self.field();
        self.gamma
            .points()
            .iter()
            .map(|p| {
                let v = f.evaluate(p.coords())?;
                match &self.f0 {
                    Some(f0) => field.div(v, f0.eval_unchecked(p.coords())),
                    None => Ok(v),
                }
            })
            .collect()
    }
}

fn code_from_matrix(gamma: &PointSet, a: i64, em: &EvalMatrix, scale: Option<&[Elem]>, f0: Option<Polynomial>) -> EvalCode {
    let field = gamma.field();
    let mut t = em.matrix.transpose();
    if let Some(s) = scale {
        for r in 0..t.rows() {
            for (c, &sc) in s.iter().enumerate() {
                t.set(r, c, field.mul(t.get(r, c), sc));
            }
        }
    }
    let gen = if t.rows() == 0 { Matrix::zeros(field, 0, gamma.len()) } else { t.row_space_basis() };
    EvalCode { gamma: gamma.clone(), degree: a, n: gamma.len(), k: gen.rows(), gen, f0 }
}

pub fn build_code(gamma: &PointSet, a: i64, f0: Option<&Polynomial>) -> Result<EvalCode> {
    let em = evaluation_matrix(gamma, a);
    let Some(f0) = f0 else {
        return Ok(code_from_matrix(gamma, a, &em, None, None));
    };
    if f0.field() != gamma.field() {
        return Err(Error::FieldMismatch);
    }
    if !f0.is_homogeneous() || f0.is_zero() {
        return Err(Error::NonHomogeneous);
    }
    let deg = f0.degree().unwrap_or(0) as i64;
    if deg != a {
        return Err(Error::DegreeOutOfRange { a: deg, lo: a, hi: a });
    }
    let field = gamma.field();
    let mut scale = Vec::with_capacity(gamma.len());
    for (index, p) in gamma.points().iter().enumerate() {
        let v = f0.evaluate(p.coords())?;
        if v == 0 {
            return Err(Error::NormalizerVanishes { index });
        }
        scale.push(field.inv_nonzero(v));
    }
    Ok(code_from_matrix(gamma, a, &em, Some(&scale), Some(f0.clone())))
}

/// Code spanned by the evaluations at arbitrary representatives of Γ's points.
pub fn build_code_from_coords(gamma: &PointSet, coords: &[Vec<Elem>], a: i64) -> EvalCode {
    let em = evaluation_matrix_from_coords(gamma.field(), gamma.dim(), coords, a);
    code_from_matrix(gamma, a, &em, None, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    /// Minimum nonzero weight; `n + 1` for the zero code.
    pub d: usize,
    pub codewords_scanned: u128,
    pub exact: bool,
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} exact={} scanned={}", self.d, self.exact, self.codewords_scanned)
    }
}

fn check_cap(code: &EvalCode, cap: u128) -> Result<u128> {
    let q = code.field().q() as u128;
    let required = q
        .checked_pow(code.k as u32)
        .map(|x| x - 1)
        .unwrap_or(u128::MAX);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    Ok(required / (q - 1))
}

/// Weight histogram over one representative per line of nonzero messages.
fn projective_histogram(code: &EvalCode) -> Vec<u64> {
    let f = code.field();
    let (n, k, q) = (code.n, code.k, f.q());
    if k == 0 {
        return vec![0; n + 1];
    }
    // multiples[j][c] = c · G_j
    let multiples: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|j| (0..q).map(|c| code.gen.row(j).iter().map(|&g| f.mul(c, g)).collect()).collect())
        .collect();

    // each job fixes the leading 1 and, when present, the next digit
    let mut jobs: Vec<(Vec<Elem>, usize)> = Vec::new();
    for lead in 0..k {
        let base = &multiples[lead][1];
        if lead + 1 < k {
            for c in 0..q {
                let v = base.iter().zip(&multiples[lead + 1][c as usize]).map(|(&x, &y)| f.add(x, y)).collect();
                jobs.push((v, lead + 2));
            }
        } else {
            jobs.push((base.clone(), k));
        }
    }

    jobs.par_iter()
        .map(|(base, first_free)| {
            let mut hist = vec![0u64; n + 1];
            let free: Vec<usize> = (*first_free..k).collect();
            let mut bufs = vec![vec![0; n]; free.len() + 1];
            bufs[free.len()].copy_from_slice(base);
            scan_level(f, &multiples, &free, &mut bufs, free.len(), &mut hist);
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

fn scan_level(
    f: &FieldSpec,
    multiples: &[Vec<Vec<Elem>>],
    free: &[usize],
    bufs: &mut [Vec<Elem>],
    level: usize,
    hist: &mut [u64],
) {
    if level == 0 {
        let w = bufs[0].iter().filter(|&&x| x != 0).count();
        hist[w] += 1;
        return;
    }
    let row = &multiples[free[level - 1]];
    if level == 1 {
        let cur = &bufs[1];
        for mult in row {
            let w = cur.iter().zip(mult).filter(|(&x, &y)| f.add(x, y) != 0).count();
            hist[w] += 1;
        }
        return;
    }
    for mult in row {
        let (lower, upper) = bufs.split_at_mut(level);
        for ((o, &x), &y) in lower[level - 1].iter_mut().zip(&upper[0]).zip(mult) {
            *o = f.add(x, y);
        }
        scan_level(f, multiples, free, bufs, level - 1, hist);
    }
}

/// Exact minimum distance by scanning all (q^k − 1)/(q − 1) projective messages.
pub fn min_distance(code: &EvalCode, cap: u128) -> Result<DistanceResult> {
    let scanned = check_cap(code, cap)?;
    let hist = projective_histogram(code);
    let d = hist.iter().skip(1).position(|&c| c > 0).map_or(code.n + 1, |i| i + 1);
    Ok(DistanceResult { d, codewords_scanned: scanned, exact: true })
}

/// Number of nonzero codewords of each weight 0..=n.
pub fn weight_distribution(code: &EvalCode, cap: u128) -> Result<Vec<u128>> {
    check_cap(code, cap)?;
    let scale = code.field().q() as u128 - 1;
    Ok(projective_histogram(code).into_iter().map(|c| c as u128 * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::variety_points;

    fn rm_gamma() -> PointSet {
        let f3 = FieldSpec::prime(3).unwrap();
        let polys: Vec<Polynomial> = ["x1^3 - x0^2*x1", "x2^3 - x0^2*x2"]
            .iter()
            .map(|s| Polynomial::parse(s, 2, &f3).unwrap())
            .collect();
        variety_points(&polys, 2, &f3).unwrap()
    }

    fn conics_gamma() -> PointSet {
        let f5 = FieldSpec::prime(5).unwrap();
        PointSet::new(&f5, 2, vec![vec![1, 1, 1], vec![1, 1, 4], vec![1, 4, 1], vec![1, 4, 4]]).unwrap()
    }

    #[test]
    fn linear_forms_on_four_points() {
        let em = evaluation_matrix(&conics_gamma(), 1);
        assert_eq!(em.matrix.row_vecs(), vec![vec![1, 1, 1], vec![1, 1, 4], vec![1, 4, 1], vec![1, 4, 4]]);
        assert_eq!(em.rank(), 3);
    }

    #[test]
    fn constants_give_rank_one() {
        let em = evaluation_matrix(&rm_gamma(), 0);
        assert_eq!(em.matrix.cols(), 1);
        assert!(em.matrix.row_vecs().iter().all(|r| r == &[1]));
        assert_eq!(rank_and_kernel(&em), (1, vec![]));
    }

    #[test]
    fn kernel_in_degree_three_is_the_defining_cubics() {
        let g = rm_gamma();
        let em = evaluation_matrix(&g, 3);
        let (rank, ker) = rank_and_kernel(&em);
        assert_eq!((rank, ker.len()), (8, 2));
        let f3 = g.field().clone();
        let cubics = [
            Polynomial::parse("x1^3 - x0^2*x1", 2, &f3).unwrap(),
            Polynomial::parse("x2^3 - x0^2*x2", 2, &f3).unwrap(),
        ];
        // span check: stacking a kernel vector onto the cubics' coefficient rows adds no rank
        let coeff_rows: Vec<Vec<Elem>> =
            cubics.iter().map(|p| em.monomials.iter().map(|m| p.coeff(m)).collect()).collect();
        for v in &ker {
            let mut rows = coeff_rows.clone();
            rows.push(v.clone());
            assert_eq!(Matrix::from_rows(&f3, rows).rank(), 2);
        }
    }

    #[test]
    fn single_point_has_rank_one() {
        let f7 = FieldSpec::prime(7).unwrap();
        let g = PointSet::new(&f7, 2, vec![vec![0, 3, 5]]).unwrap();
        for a in 0..5 {
            assert_eq!(evaluation_matrix(&g, a).rank(), 1);
        }
    }

    #[test]
    fn normalizer_choice() {
        assert_eq!(choose_f0(&rm_gamma(), 3).unwrap().to_string(), "x0^3");

        let f3 = FieldSpec::prime(3).unwrap();
        let g = PointSet::new(&f3, 2, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let f0 = choose_f0(&g, 1).unwrap();
        assert!(g.points().iter().all(|p| f0.evaluate(p.coords()).unwrap() != 0));

        let f2 = FieldSpec::prime(2).unwrap();
        let line = crate::projgeom::enumerate_projective(1, &f2).unwrap();
        assert_eq!(choose_f0(&line, 1).unwrap_err(), Error::NoNormalizerFound { trials: NORMALIZER_TRIALS });
    }

    #[test]
    fn build_code_parameters() {
        let f5 = FieldSpec::prime(5).unwrap();
        let line = PointSet::new(&f5, 1, (0..5).map(|t| vec![1, t])).unwrap();
        let c = build_code(&line, 2, None).unwrap();
        assert_eq!((c.n, c.k), (5, 3));

        let c = build_code(&rm_gamma(), 2, None).unwrap();
        assert_eq!((c.n, c.k), (9, 6));

        let c = build_code(&rm_gamma(), 0, None).unwrap();
        assert_eq!((c.n, c.k), (9, 1));
        assert_eq!(min_distance(&c, DEFAULT_CAP).unwrap().d, 9);
    }

    #[test]
    fn vanishing_normalizer_is_rejected() {
        let g = rm_gamma();
        let f0 = Polynomial::parse("x1", 2, g.field()).unwrap();
        assert_eq!(build_code(&g, 1, Some(&f0)).unwrap_err(), Error::NormalizerVanishes { index: 0 });
    }

    #[test]
    fn normalized_words_divide_by_f0() {
        let g = conics_gamma();
        let f0 = Polynomial::parse("x0 + x1 + x2", 2, g.field()).unwrap();
        let code = build_code(&g, 1, Some(&f0)).unwrap();
        let f = Polynomial::parse("x1", 2, g.field()).unwrap();
        let w = code.word_of(&f).unwrap();
        let f5 = g.field();
        for (p, &wi) in g.points().iter().zip(&w) {
            let c = p.coords();
            assert_eq!(f5.mul(wi, f0.evaluate(c).unwrap()), c[1]);
        }
        // the word lies in the row space of the generator
        let mut rows = code.gen.row_vecs();
        rows.push(w);
        assert_eq!(Matrix::from_rows(f5, rows).rank(), code.k);
    }

    #[test]
    fn reed_muller_distances() {
        let g = rm_gamma();
        for (a, d) in [(1, 6), (2, 3), (3, 2)] {
            let code = build_code(&g, a, None).unwrap();
            assert_eq!(min_distance(&code, DEFAULT_CAP).unwrap().d, d, "a={a}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let code = build_code(&rm_gamma(), 3, None).unwrap();
        let err = min_distance(&code, 100).unwrap_err();
        assert_eq!(err, Error::CapExceeded { required: 6560, cap: 100 });
        let r = min_distance(&code, 6560).unwrap();
        assert_eq!(r.codewords_scanned, 3280);
        assert_eq!(r.to_string(), "d=2 exact=true scanned=3280");
    }

    #[test]
    fn weight_distribution_counts_every_nonzero_word() {
        let code = build_code(&conics_gamma(), 1, None).unwrap();
        let dist = weight_distribution(&code, DEFAULT_CAP).unwrap();
        assert_eq!(dist.iter().sum::<u128>(), 5u128.pow(3) - 1);
        assert_eq!(dist[0], 0);
    }
}
