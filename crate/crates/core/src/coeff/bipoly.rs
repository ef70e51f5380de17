use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers.
pub type Q = BigRational;

/// A polynomial in `q` and `t` with rational coefficients.
///
/// Terms are keyed by `(deg_q, deg_t)`; the map order is lexicographic on
/// that pair, so the first entry is the lexicographically least term.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Q::from_integer(c.into()))
    }

    pub fn monomial(c: Q, dq: u32, dt: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dt), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(Q::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Q::one(), 0, 1)
    }

    /// Builds a polynomial from `(coeff, deg_q, deg_t)` triples, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Q, u32, u32)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (c, dq, dt) in iter {
            p.add_term((dq, dt), c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Returns the constant if the polynomial has no `q` or `t` dependence.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of `(deg_q, deg_t)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &Q)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, dq: u32, dt: u32) -> Q {
        self.terms.get(&(dq, dt)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn lex_least(&self) -> Option<(&(u32, u32), &Q)> {
        self.terms.iter().next()
    }

    pub fn lex_leading(&self) -> Option<(&(u32, u32), &Q)> {
        self.terms.iter().next_back()
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn min_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).min().unwrap_or(0)
    }

    pub fn min_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).min().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^dq t^dt`.
    pub fn shift(&self, dq: u32, dt: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + dq, b + dt), v.clone()))
                .collect(),
        }
    }

    /// Divides by `q^dq t^dt`; every term must be divisible.
    pub(crate) fn unshift(&self, dq: u32, dt: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a - dq, b - dt), v.clone()))
                .collect(),
        }
    }

    /// `q^{Dq} t^{Dt} p(1/q, 1/t)` where `(Dq, Dt)` are the maximal degrees.
    pub fn reversed(&self) -> Self {
        let (dq, dt) = (self.deg_q(), self.deg_t());
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((dq - a, dt - b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q0: &Q, t0: &Q) -> Q {
        let qp = powers(q0, self.deg_q());
        let tp = powers(t0, self.deg_t());
        self.terms
            .iter()
            .fold(Q::zero(), |acc, (&(a, b), c)| acc + c * &qp[a as usize] * &tp[b as usize])
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let (&(lq, lt), lc) = d.lex_leading()?;
        if d.is_monomial() {
            let mut out = BTreeMap::new();
            for (&(a, b), c) in &self.terms {
                if a < lq || b < lt {
                    return None;
                }
                out.insert((a - lq, b - lt), c / lc);
            }
            return Some(BiPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((&(a, b), c)) = rem.lex_leading() {
            if a < lq || b < lt {
                return None;
            }
            let factor = c / lc;
            let (sq, st) = (a - lq, b - lt);
            for (&(dq, dt), dc) in &d.terms {
                rem.add_term((dq + sq, dt + st), -(dc * &factor));
            }
            quot.add_term((sq, st), factor);
        }
        Some(quot)
    }

    /// The factor `s` such that `s * self` has coprime integer coefficients
    /// and a positive lexicographically least term.
    pub fn normalizing_factor(&self) -> Q {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        if num_gcd.is_zero() {
            return Q::one();
        }
        let mut s = Q::new(den_lcm, num_gcd);
        if self.lex_least().is_some_and(|(_, c)| c.is_negative()) {
            s = -s;
        }
        s
    }
}

fn powers(x: &Q, d: u32) -> Vec<Q> {
    let mut v = Vec::with_capacity(d as usize + 1);
    v.push(Q::one());
    for i in 0..d as usize {
        let next = &v[i] * x;
        v.push(next);
    }
    v
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &rhs.terms {
                out.add_term((a + d, b + e), c * f);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(mut self) -> BiPoly {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                factors.push(abs.to_string());
            }
            match a {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
