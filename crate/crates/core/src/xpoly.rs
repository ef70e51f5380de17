//! Polynomials in `x_1, …, x_n` over ℚ(q,t).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{RationalQT, Q};
use crate::error::{Error, Result};

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
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

/// A polynomial in `n` variables with coefficients in ℚ(q,t).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<Monomial, RationalQT>,
}

/// A variable substitution `x_i ↦ q^{k_i} x_{s(i)}`.
///
/// Entry `i - 1` holds `(s(i), k_i)` with `s(i)` one-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubstSpec {
    entries: Vec<(usize, i32)>,
}

impl SubstSpec {
    pub fn new(entries: Vec<(usize, i32)>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &(s, _) in &entries {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::InvalidSubstitution(format!("{entries:?}")));
            }
            seen[s - 1] = true;
        }
        Ok(Self { entries })
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: (1..=n).map(|i| (i, 0)).collect() }
    }

    /// `x_i ↦ x_{π(i)}` for a one-line permutation of `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        Self::new(images.iter().map(|&s| (s, 0)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, i32)] {
        &self.entries
    }

    /// The substitution equal to applying `self` and then `next`.
    pub fn then(&self, next: &SubstSpec) -> Result<SubstSpec> {
        if self.len() != next.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: next.len() });
        }
        Ok(SubstSpec {
            entries: self
                .entries
                .iter()
                .map(|&(s, k)| {
                    let (s2, k2) = next.entries[s - 1];
                    (s2, k + k2)
                })
                .collect(),
        })
    }
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RationalQT::one())
    }

    pub fn constant(n: usize, c: RationalQT) -> Self {
        Self::term(n, vec![0; n], c)
    }

    pub fn term(n: usize, exp: Vec<u32>, c: RationalQT) -> Self {
        assert_eq!(exp.len(), n, "exponent vector length");
        let mut p = Self::zero(n);
        p.add_term(Monomial(exp), c);
        p
    }

    /// The variable `x_i` (one-based).
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable index out of range");
        let mut exp = vec![0; n];
        exp[i - 1] = 1;
        Self::term(n, exp, RationalQT::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, RationalQT)>>(n: usize, iter: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in iter {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: RationalQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Sums coefficient lists per monomial in one pass.
    pub(crate) fn from_grouped(n: usize, groups: BTreeMap<Monomial, Vec<RationalQT>>) -> Self {
        let terms = groups
            .into_iter()
            .filter_map(|(m, cs)| {
                let s = RationalQT::sum(cs.iter());
                (!s.is_zero()).then_some((m, s))
            })
            .collect();
        Self { n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n
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

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &RationalQT)> + '_ {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exp: &[u32]) -> RationalQT {
        self.terms.get(&Monomial(exp.to_vec())).cloned().unwrap_or_else(RationalQT::zero)
    }

    fn check_n(&self, other: &XPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut groups: BTreeMap<Monomial, Vec<RationalQT>> = BTreeMap::new();
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            groups.entry(m.clone()).or_default().push(c.clone());
        }
        Ok(Self::from_grouped(self.n, groups))
    }

    pub fn checked_sub(&self, other: &XPoly) -> Result<XPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut groups: BTreeMap<Monomial, Vec<RationalQT>> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                groups.entry(Monomial(e)).or_default().push(c1 * c2);
            }
        }
        Ok(Self::from_grouped(self.n, groups))
    }

    /// Sum of many polynomials sharing a variable count.
    pub fn sum<'a, I: IntoIterator<Item = &'a XPoly>>(n: usize, iter: I) -> Result<XPoly> {
        let mut groups: BTreeMap<Monomial, Vec<RationalQT>> = BTreeMap::new();
        for p in iter {
            if p.n != n {
                return Err(Error::VariableMismatch { left: n, right: p.n });
            }
            for (m, c) in &p.terms {
                groups.entry(m.clone()).or_default().push(c.clone());
            }
        }
        Ok(Self::from_grouped(n, groups))
    }

    pub fn scale(&self, c: &RationalQT) -> XPoly {
        if c.is_zero() {
            return XPoly::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        XPoly { n: self.n, terms }
    }

    /// Multiplies every coefficient by `q^a t^b`.
    pub fn mul_qt(&self, a: i32, b: i32) -> XPoly {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.mul_monomial(a, b))).collect();
        XPoly { n: self.n, terms }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RationalQT) -> RationalQT) -> XPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, v)| {
                let c = f(v);
                (!c.is_zero()).then(|| (m.clone(), c))
            })
            .collect();
        XPoly { n: self.n, terms }
    }

    pub fn substitute(&self, s: &SubstSpec) -> Result<XPoly> {
        if s.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: s.len() });
        }
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.n];
            let mut qpow = 0i32;
            for (i, &ei) in m.0.iter().enumerate() {
                let (src, k) = s.entries[i];
                e[src - 1] += ei;
                qpow += k * ei as i32;
            }
            out.add_term(Monomial(e), c.mul_monomial(qpow, 0));
        }
        Ok(out)
    }

    /// `x_i ↦ x_{π(i)}`, i.e. the natural left action of `π` given in
    /// one-line notation on `1..=n`.
    pub fn permute_vars(&self, images: &[usize]) -> Result<XPoly> {
        self.substitute(&SubstSpec::from_images(images)?)
    }

    /// The transposition `σ_i` acting on variables (one-based `i`).
    pub fn swap_vars(&self, i: usize) -> XPoly {
        assert!(i >= 1 && i < self.n, "transposition index out of range");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(i - 1, i);
                (Monomial(e), c.clone())
            })
            .collect();
        XPoly { n: self.n, terms }
    }

    /// Applies `q ↦ q⁻¹, t ↦ t⁻¹` to every coefficient.
    pub fn param_invert(&self) -> XPoly {
        self.map_coeffs(RationalQT::invert_params)
    }

    /// True iff invariant under every `σ_i` with `i < m`.
    pub fn is_symmetric(&self, m: usize) -> bool {
        (1..m.min(self.n)).all(|i| &self.swap_vars(i) == self)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Exact quotient by `x_i - x_j`; a nonzero remainder is an error.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<XPoly> {
        let (ii, jj) = (i - 1, j - 1);
        let n = self.n;
        let d = self.terms.keys().map(|m| m.0[ii]).max().unwrap_or(0) as usize;
        // coefficients of x_i^k with the x_i exponent stripped
        let mut layers: Vec<XPoly> = vec![XPoly::zero(n); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[ii] as usize;
            e[ii] = 0;
            layers[k].terms.insert(Monomial(e), c.clone());
        }
        let shift_j = |p: &XPoly| -> XPoly {
            let terms = p
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[jj] += 1;
                    (Monomial(e), c.clone())
                })
                .collect();
            XPoly { n, terms }
        };
        let mut quotient = XPoly::zero(n);
        let mut carry = XPoly::zero(n);
        for k in (1..=d).rev() {
            // b_{k-1} = c_k + x_j b_k
            let b = layers[k].checked_add(&shift_j(&carry))?;
            for (m, c) in &b.terms {
                let mut e = m.0.clone();
                e[ii] = (k - 1) as u32;
                quotient.terms.insert(Monomial(e), c.clone());
            }
            carry = b;
        }
        let rem = layers[0].checked_add(&shift_j(&carry))?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(quotient)
    }

    pub fn eval(&self, q0: &Q, t0: &Q, x0: &[Q]) -> Result<Q> {
        if x0.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: x0.len() });
        }
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c.eval(q0, t0)?;
            for (x, &e) in x0.iter().zip(&m.0) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Coefficient-wise evaluation at `(q0, t0)`, keeping `x` symbolic.
    pub fn specialize(&self, q0: &Q, t0: &Q) -> Result<BTreeMap<Vec<u32>, Q>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.eval(q0, t0)?;
            if !v.is_zero() {
                out.insert(m.0.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: String = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x_{{{}}}", i + 1) } else { format!("x_{{{}}}^{{{}}}", i + 1, e) })
                .collect::<Vec<_>>()
                .join(" ");
            let coeff = if c.is_one() && !mono.is_empty() {
                String::new()
            } else if c.denom().is_one() && c.numer().len() > 1 && !mono.is_empty() {
                format!("\\left({}\\right)", c.to_latex())
            } else {
                c.to_latex()
            };
            let sep = if coeff.is_empty() || mono.is_empty() { "" } else { " " };
            parts.push(format!("{coeff}{sep}{mono}"));
        }
        parts.join(" + ")
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: RationalQT,
}

#[derive(Serialize, Deserialize)]
struct XPolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

/// Terms are written in decreasing graded-lexicographic order.
impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        XPolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson { exp: m.0.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = XPolyJson::deserialize(d)?;
        let mut p = XPoly::zero(raw.n);
        for t in raw.terms {
            if t.exp.len() != raw.n {
                return Err(serde::de::Error::custom(format!(
                    "exponent vector of length {} in a polynomial with n = {}",
                    t.exp.len(),
                    raw.n
                )));
            }
            p.add_term(Monomial(t.exp), t.coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> XPoly {
        XPoly::var(n, i)
    }

    #[test]
    fn grlex_order() {
        assert!(Monomial(vec![0, 2]) > Monomial(vec![1, 0]));
        assert!(Monomial(vec![1, 1]) > Monomial(vec![0, 2]));
    }

    #[test]
    fn difference_quotient_is_exact() {
        let f = &(&x(2, 1) * &x(2, 1)) - &(&x(2, 2) * &x(2, 2));
        let q = f.div_by_difference(1, 2).unwrap();
        assert_eq!(q, &x(2, 1) + &x(2, 2));
        assert_eq!(x(2, 1).div_by_difference(1, 2), Err(Error::InexactDivision));
    }

    #[test]
    fn symmetric_detection() {
        assert!((&x(2, 1) + &x(2, 2)).is_symmetric(2));
        assert!(!x(2, 1).is_symmetric(2));
        assert!(x(2, 1).is_symmetric(1));
    }

    #[test]
    fn mismatched_variable_counts() {
        assert!(x(2, 1).checked_add(&x(3, 1)).is_err());
    }

    #[test]
    fn substitution_spec_must_permute() {
        assert!(SubstSpec::new(vec![(1, 0), (1, 0)]).is_err());
        assert!(SubstSpec::new(vec![(2, 0), (3, 0)]).is_err());
    }

    #[test]
    fn q_scaled_substitution() {
        let s = SubstSpec::new(vec![(1, 0), (2, 1)]).unwrap();
        let r = x(2, 2).substitute(&s).unwrap();
        assert_eq!(r, x(2, 2).scale(&RationalQT::q()));
    }
}
