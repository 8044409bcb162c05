//! Sparse multivariate polynomials over F_q in the variables x₀..x_m.
//!
//! Monomials are ordered graded-lexicographically with x₀ ≻ x₁ ≻ … ≻ x_m.
//! That order fixes the column order of every evaluation matrix.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

/// Exponent vector of length m+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn evaluate(&self, field: &FieldSpec, point: &[Elem]) -> Elem {
        self.0
            .iter()
            .zip(point)
            .fold(1, |acc, (&e, &x)| if e == 0 { acc } else { field.mul(acc, field.pow(x, e as u64)) })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// dim R_a = C(a+m, m); zero for negative degrees.
pub fn dim_forms(m: usize, a: i64) -> usize {
    if a < 0 {
        0
    } else {
        binomial(a as u64 + m as u64, m as u64) as usize
    }
}

/// All monomials of degree `a` in m+1 variables, greatest first.
pub fn monomials_of_degree(m: usize, a: i64) -> Vec<Monomial> {
    fn fill(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = rest;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            cur[pos] = e;
            fill(rest - e, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
    if a < 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(dim_forms(m, a));
    fill(a as u32, 0, &mut vec![0; m + 1], &mut out);
    out
}

/// A polynomial with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Elem>,
    num_vars: usize,
    field: FieldSpec,
}

impl Polynomial {
    pub fn zero(field: &FieldSpec, num_vars: usize) -> Self {
        Self { terms: BTreeMap::new(), num_vars, field: field.clone() }
    }

    pub fn constant(field: &FieldSpec, num_vars: usize, c: Elem) -> Self {
        Self::term(field, Monomial::one(num_vars), c)
    }

    pub fn term(field: &FieldSpec, mono: Monomial, c: Elem) -> Self {
        let mut p = Self::zero(field, mono.num_vars());
        if c != 0 {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn var(field: &FieldSpec, num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::term(field, Monomial(e), 1)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, combining repeats.
    pub fn from_terms(
        field: &FieldSpec,
        num_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, num_vars);
        for (mono, c) in terms {
            if mono.num_vars() != num_vars {
                return Err(Error::ArityMismatch { expected: num_vars, got: mono.num_vars() });
            }
            p.add_term(mono, field.elem(c)?);
        }
        Ok(p)
    }

    fn add_term(&mut self, mono: Monomial, c: Elem) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.field.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, mono: &Monomial) -> Elem {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.num_vars != other.num_vars {
            return Err(Error::ArityMismatch { expected: self.num_vars, got: other.num_vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        let mut out = Self::zero(&self.field, self.num_vars);
        if c != 0 {
            out.terms = self.terms.iter().map(|(m, &x)| (m.clone(), self.field.mul(x, c))).collect();
        }
        out
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.field, self.num_vars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut acc = Self::constant(&self.field, self.num_vars, 1);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.multiply(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.num_vars {
            return Err(Error::ArityMismatch { expected: self.num_vars, got: point.len() });
        }
        if let Some(&bad) = point.iter().find(|&&x| x >= self.field.q()) {
            return Err(Error::ElementOutOfRange { value: bad, q: self.field.q() });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Elem]) -> Elem {
        self.terms
            .iter()
            .fold(0, |acc, (m, &c)| self.field.add(acc, self.field.mul(c, m.evaluate(&self.field, point))))
    }

    /// Formal derivative with respect to `x_var`; the integer exponent is
    /// reduced mod p, so terms with exponent ≡ 0 mod p drop out.
    ///
    /// Panics if `var` is not below `num_vars`.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.num_vars, "variable x{var} out of range");
        let mut out = Self::zero(&self.field, self.num_vars);
        for (m, &c) in &self.terms {
            let e = m.0[var];
            let factor = self.field.from_int(e as i64);
            if factor == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), self.field.mul(c, factor));
        }
        out
    }

    /// Parses an expression in x0..x_m with integer literals and the
    /// extension generator `w`.
    pub fn parse(text: &str, m: usize, field: &FieldSpec) -> Result<Polynomial> {
        let mut parser = Parser { src: text.as_bytes(), pos: 0, m, field };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos < parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Writes a coefficient so that it parses back to the same element.
pub fn format_elem(field: &FieldSpec, c: Elem) -> String {
    if field.e() == 1 {
        return c.to_string();
    }
    let parts: Vec<String> = field
        .digits(c)
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| match (i, d) {
            (0, d) => d.to_string(),
            (1, 1) => "w".to_string(),
            (1, d) => format!("{d}*w"),
            (i, 1) => format!("w^{i}"),
            (i, d) => format!("{d}*w^{i}"),
        })
        .collect();
    match parts.len() {
        0 => "0".to_string(),
        1 => parts.into_iter().next().unwrap(),
        _ => format!("({})", parts.join(" + ")),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let constant = m.degree() == 0;
            match (c, constant) {
                (_, true) => f.write_str(&format_elem(&self.field, c))?,
                (1, false) => write!(f, "{m}")?,
                _ => write!(f, "{}*{m}", format_elem(&self.field, c))?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    m: usize,
    field: &'a FieldSpec,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next significant token start; the Unicode minus sign reads as `-`.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        if self.src[self.pos..].starts_with("−".as_bytes()) {
            return Some(b'-');
        }
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        if self.src[self.pos..].starts_with("−".as_bytes()) {
            self.pos += "−".len();
        } else {
            self.pos += 1;
        }
    }

    fn nvars(&self) -> usize {
        self.m + 1
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.multiply(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                return Ok(self.factor()?.neg());
            }
            Some(b'+') => {
                self.bump();
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let n = self.integer()?;
            let n = u32::try_from(n).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax { pos: start, msg: "integer literal too large".into() })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.nvars();
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let c = (v % self.field.p() as u64) as Elem;
                Ok(Polynomial::constant(self.field, n, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "w" {
                    return Ok(Polynomial::constant(self.field, n, self.field.generator_w()));
                }
                let index = name
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i < n);
                match index {
                    Some(i) => Ok(Polynomial::var(self.field, n, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn parse_reduces_negative_coefficients() {
        let p = Polynomial::parse("x1^3 - x0^2*x1", 2, &f(3)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&mono(&[0, 3, 0])), 1);
        assert_eq!(p.coeff(&mono(&[2, 1, 0])), 2);
    }

    #[test]
    fn parse_hermitian_factor_product_q2() {
        let p = Polynomial::parse("x2^2 + x2*x0 + x0^2", 2, &f(4)).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn parse_errors() {
        let f3 = f(3);
        assert_eq!(Polynomial::parse("x0 + y", 2, &f3), Err(Error::UnknownVariable("y".into())));
        assert_eq!(Polynomial::parse("x3", 2, &f3), Err(Error::UnknownVariable("x3".into())));
        assert!(matches!(Polynomial::parse("x0 +", 2, &f3), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("x0 x1", 2, &f3), Err(Error::Syntax { .. })));
        assert!(matches!(Polynomial::parse("(x0", 2, &f3), Err(Error::Syntax { .. })));
        assert!(Polynomial::parse("x0 - x0", 2, &f3).unwrap().is_zero());
    }

    #[test]
    fn parse_generator_and_unicode_minus() {
        let f4 = f(4);
        let p = Polynomial::parse("w^2*x0 − w*x1", 1, &f4).unwrap();
        assert_eq!(p.coeff(&mono(&[1, 0])), 3);
        assert_eq!(p.coeff(&mono(&[0, 1])), 2);
    }

    #[test]
    fn display_round_trips_extension_coefficients() {
        let f9 = f(9);
        let p = Polynomial::parse("(2 + w)*x0^2 + 2*w*x1*x2 - x2^2", 2, &f9).unwrap();
        let back = Polynomial::parse(&p.to_string(), 2, &f9).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn evaluate_examples() {
        let f3 = f(3);
        let p = Polynomial::parse("x1^3 - x0^2*x1", 2, &f3).unwrap();
        assert_eq!(p.evaluate(&[1, 0, 0]).unwrap(), 0);
        assert_eq!(p.evaluate(&[1, 2, 0]).unwrap(), 0);
        assert!(matches!(p.evaluate(&[1, 2]), Err(Error::ArityMismatch { .. })));

        let f5 = f(5);
        let p = Polynomial::parse("x1^3 - x0^2*x1", 2, &f5).unwrap();
        let base = p.evaluate(&[1, 2, 0]).unwrap();
        let scaled = p.evaluate(&[2, 4, 0]).unwrap();
        assert_eq!(scaled, f5.mul(f5.pow(2, 3), base));
    }

    #[test]
    fn product_of_conjugate_linear_factors_over_f4() {
        let f4 = f(4);
        let a = Polynomial::parse("x2 - w*x0", 2, &f4).unwrap();
        let b = Polynomial::parse("x2 - w^2*x0", 2, &f4).unwrap();
        let expected = Polynomial::parse("x2^2 + x2*x0 + x0^2", 2, &f4).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expected);

        let one = Polynomial::constant(&f4, 3, 1);
        assert_eq!(a.multiply(&one).unwrap(), a);
        assert!(a.multiply(&Polynomial::zero(&f4, 3)).unwrap().is_zero());
    }

    #[test]
    fn multiply_rejects_mixed_fields() {
        let a = Polynomial::var(&f(5), 3, 0);
        let b = Polynomial::var(&f(7), 3, 0);
        assert_eq!(a.multiply(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn derivatives() {
        for q in [2u32, 3, 4, 9] {
            let fq = f(q);
            let p = Polynomial::parse(&format!("x1^{q}"), 2, &fq).unwrap();
            assert!(p.partial_derivative(1).is_zero());
        }
        let f5 = f(5);
        let p = Polynomial::parse("x1^3", 2, &f5).unwrap();
        assert_eq!(p.partial_derivative(1), Polynomial::parse("3*x1^2", 2, &f5).unwrap());

        let f4 = f(4);
        let p = Polynomial::parse("x2^2 + x2*x0 + x0^2", 2, &f4).unwrap();
        assert_eq!(p.partial_derivative(2), Polynomial::var(&f4, 3, 0));
    }

    #[test]
    fn graded_lex_enumeration() {
        let ms: Vec<String> = monomials_of_degree(2, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
        assert_eq!(monomials_of_degree(1, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(4)]);
        assert!(monomials_of_degree(2, -1).is_empty());
        for m in 1..=4usize {
            for a in 0..=10i64 {
                assert_eq!(monomials_of_degree(m, a).len() as u64, binomial(a as u64 + m as u64, m as u64));
            }
        }
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        let ms = monomials_of_degree(3, 4);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}
