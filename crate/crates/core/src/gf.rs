//! Table-driven arithmetic in F_q, q = p^e ≤ 2^16.
//!
//! An element is stored as the base-p integer of its coefficient vector in
//! the basis 1, w, w², …, where w is the residue of the modulus variable.
//! The encoding `c₀ + c₁·p + … + c_{e−1}·p^{e−1}` is used for every piece of
//! I/O, so 0 and 1 are always the additive and multiplicative identities.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Field element, encoded as an integer in `[0, q)`.
pub type Elem = u32;

pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Fields with at most this many elements get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// A finite field F_{p^e}. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i < 2(q−1)`, so that log sums need no reduction.
    exp: Vec<Elem>,
    /// `log[x]` for nonzero x; `log[0]` is unused.
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<u16>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.inner.p)
            .field("e", &self.inner.e)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    /// Formats the field as the header line of a variety file.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "field p={} e={}", self.p(), self.e())?;
        if self.e() > 1 {
            let coeffs: Vec<String> = self.modulus().iter().map(|c| c.to_string()).collect();
            write!(f, " modulus={}", coeffs.join(","))?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, e)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo `b` over F_p; both ascending, `b` monic with nonzero degree.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds F_{p^e}. With no modulus, picks the monic irreducible of degree
    /// `e` whose ascending base-p encoding is smallest.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ModulusDegree { expected: 0, got: modulus.map(<[u32]>::to_vec).unwrap_or_default() });
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_SIZE);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, e });
        };
        let q = q as u32;

        let modulus = match modulus {
            Some(given) => {
                let m: Vec<u32> = given.iter().map(|c| c % p).collect();
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::ModulusDegree { expected: e, got: given.to_vec() });
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(given.to_vec()));
                }
                m
            }
            None => (0..q)
                .map(|code| {
                    let mut m = to_digits(code, p, e);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists"),
        };

        Ok(Self { inner: Arc::new(Tables::build(p, e, q, modulus)) })
    }

    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// The field of order `q` with the default modulus.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Ascending coefficients of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q()
    }

    /// Validates an encoding.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.q() {
            Ok(value)
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q() })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p() as i64) as Elem
    }

    /// The residue `w` of the modulus variable.
    pub fn generator_w(&self) -> Elem {
        if self.e() > 1 {
            self.p()
        } else {
            self.neg(self.inner.modulus[0])
        }
    }

    /// Base-p digits of `x`, least significant first, length `e`.
    pub fn digits(&self, x: Elem) -> Vec<u32> {
        to_digits(x, self.p(), self.e())
    }

    /// Generator of the multiplicative group used for the log tables.
    pub fn primitive(&self) -> Elem {
        self.inner.exp[1 % self.inner.exp.len().max(1)]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.inner;
        if t.p == 2 {
            a ^ b
        } else if t.e == 1 {
            let s = a + b;
            if s >= t.p {
                s - t.p
            } else {
                s
            }
        } else if let Some(table) = &t.add {
            table[(a * t.q + b) as usize] as Elem
        } else {
            let (mut x, mut y, mut place, mut out) = (a, b, 1, 0);
            while x > 0 || y > 0 {
                out += ((x % t.p + y % t.p) % t.p) * place;
                x /= t.p;
                y /= t.p;
                place *= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.inner;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(a != 0);
        let t = &*self.inner;
        let l = t.log[a as usize];
        t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `0^0 = 1`.
    pub fn pow(&self, base: Elem, mut exp: u64) -> Elem {
        let mut acc = 1;
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q() - 1;
        let l = self.inner.log[a as usize];
        Ok(n / gcd(n, l))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn to_digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl Tables {
    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Self {
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a, p, e), to_digits(b, p, e));
            let mut prod = vec![0u32; 2 * e as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = if e == 1 { prod } else { poly_rem(&prod, &modulus, p) };
            r.resize(e as usize, 0);
            from_digits(&r, p)
        };
        let slow_pow = |g: u32, mut n: u32| -> u32 {
            let (mut acc, mut b) = (1, g);
            while n > 0 {
                if n & 1 == 1 {
                    acc = slow_mul(acc, b);
                }
                b = slow_mul(b, b);
                n >>= 1;
            }
            acc
        };

        let order = q - 1;
        let factors = prime_factors(order);
        let g = (1..q)
            .find(|&g| factors.iter().all(|r| slow_pow(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = slow_mul(x, g);
        }

        let neg: Vec<Elem> = (0..q)
            .map(|a| {
                let d: Vec<u32> = to_digits(a, p, e).iter().map(|&c| (p - c) % p).collect();
                from_digits(&d, p)
            })
            .collect();

        let add = (p != 2 && e > 1 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = to_digits(a, p, e);
                for b in 0..q {
                    let s: Vec<u32> =
                        da.iter().zip(to_digits(b, p, e)).map(|(&x, y)| (x + y) % p).collect();
                    table[(a * q + b) as usize] = from_digits(&s, p) as u16;
                }
            }
            table
        });

        Tables { p, e, q, modulus, exp, log, neg, add }
    }
}
