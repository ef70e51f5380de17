use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::bipoly::{BiPoly, Q};
use super::gcd::gcd;
use crate::error::{Error, Result};

/// An element of ℚ(q,t) in canonical form.
///
/// The fraction is fully reduced and the denominator has coprime integer
/// coefficients with a positive lexicographically least term, so structural
/// equality coincides with equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalQT {
    num: BiPoly,
    den: BiPoly,
}

impl Default for RationalQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalQT {
    /// Normalizes `num / den`.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.as_constant().is_some() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides numerator"), den.exact_div(&g).expect("gcd divides denominator"))
        };
        Self::rescale(num, den)
    }

    /// Fixes the scale of an already coprime pair.
    fn rescale(num: BiPoly, den: BiPoly) -> Self {
        let s = den.normalizing_factor();
        if s.is_one() {
            Self { num, den }
        } else {
            Self { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    pub fn zero() -> Self {
        Self { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self { num: p, den: BiPoly::one() }
    }

    pub fn from_q(c: Q) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(BiPoly::from_int(c))
    }

    pub fn q() -> Self {
        Self::from_poly(BiPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(BiPoly::t())
    }

    /// `q^a t^b` for arbitrary integer exponents.
    pub fn monomial(a: i32, b: i32) -> Self {
        let num = BiPoly::monomial(Q::one(), a.max(0) as u32, b.max(0) as u32);
        let den = BiPoly::monomial(Q::one(), (-a).max(0) as u32, (-b).max(0) as u32);
        Self { num, den }
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational constant, if the value does not depend on `q` or `t`.
    pub fn as_constant(&self) -> Option<Q> {
        let d = self.den.as_constant()?;
        Some(self.num.as_constant()? / d)
    }

    /// Multiplies by `q^a t^b` without a general gcd.
    pub fn mul_monomial(&self, a: i32, b: i32) -> Self {
        if self.is_zero() || (a == 0 && b == 0) {
            return self.clone();
        }
        // positive powers cancel against monomial factors of the denominator
        // and vice versa
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        let mut apply = |e: i32, is_q: bool| {
            if e == 0 {
                return;
            }
            let (top, bottom) = if e > 0 { (&mut num, &mut den) } else { (&mut den, &mut num) };
            let e = e.unsigned_abs();
            let avail = if is_q { bottom.min_q() } else { bottom.min_t() };
            let cancel = avail.min(e);
            if cancel > 0 {
                *bottom = if is_q { bottom.unshift(cancel, 0) } else { bottom.unshift(0, cancel) };
            }
            let rest = e - cancel;
            if rest > 0 {
                *top = if is_q { top.shift(rest, 0) } else { top.shift(0, rest) };
            }
        };
        apply(a, true);
        apply(b, false);
        Self::rescale(num, den)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_impl(&rhs.recip()?))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::rescale(self.den.clone(), self.num.clone()))
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let div = |p: &BiPoly, g: &BiPoly| {
            if g.as_constant().is_some() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        Self::rescale(num, den)
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Self { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        // a/b + c is already reduced since gcd(a + cb, b) = gcd(a, b)
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs.num * &self.den);
            return Self::from_coprime(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = &rhs.num + &(&self.num * &rhs.den);
            return Self::from_coprime(num, rhs.den.clone());
        }
        // with g = gcd(b, d), b = g b', d = g d': the sum (a d' + c b') / (g b' d')
        // can only share factors with g
        let g = gcd(&self.den, &rhs.den);
        if g.as_constant().is_some() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return Self::from_coprime(num, &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return Self::zero();
        }
        let h = gcd(&num, &g);
        let (num, g) = if h.as_constant().is_some() {
            (num, g)
        } else {
            (num.exact_div(&h).expect("gcd divides"), g.exact_div(&h).expect("gcd divides"))
        };
        Self::from_coprime(num, &(&g * &d1) * &d2)
    }

    /// The image under `q ↦ 1/q`, `t ↦ 1/t`.
    pub fn invert_params(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // num(1/q,1/t) = q^-Nq t^-Nt rev(num), likewise for den
        let (nq, nt) = (self.num.deg_q() as i64, self.num.deg_t() as i64);
        let (dq, dt) = (self.den.deg_q() as i64, self.den.deg_t() as i64);
        let (eq, et) = (dq - nq, dt - nt);
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if eq > 0 {
            num = num.shift(eq as u32, 0);
        } else {
            den = den.shift((-eq) as u32, 0);
        }
        if et > 0 {
            num = num.shift(0, et as u32);
        } else {
            den = den.shift(0, (-et) as u32);
        }
        Self::reduce(num, den)
    }

    pub fn eval(&self, q0: &Q, t0: &Q) -> Result<Q> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::Pole { q: q0.to_string(), t: t0.to_string() });
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Sums many terms, combining denominators pairwise.
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalQT>>(iter: I) -> Self {
        let mut items: Vec<RationalQT> = iter.into_iter().filter(|r| !r.is_zero()).cloned().collect();
        // pairwise tree reduction keeps intermediate denominators small
        while items.len() > 1 {
            let mut next = Vec::with_capacity(items.len().div_ceil(2));
            let mut it = items.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(&a + &b),
                    None => next.push(a),
                }
            }
            items = next;
        }
        items.pop().unwrap_or_else(Self::zero)
    }

    /// Builds `num/den` from parts already known to be coprime.
    pub(crate) fn from_coprime(num: BiPoly, den: BiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        Self::rescale(num, den)
    }
}

impl<'a> Add<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn add(self, rhs: &RationalQT) -> RationalQT {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn sub(self, rhs: &RationalQT) -> RationalQT {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn mul(self, rhs: &RationalQT) -> RationalQT {
        self.mul_impl(rhs)
    }
}

/// Panics on a zero divisor; use [`RationalQT::checked_div`] to handle it.
impl<'a> Div<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn div(self, rhs: &RationalQT) -> RationalQT {
        self.checked_div(rhs).expect("division by zero in ℚ(q,t)")
    }
}

impl Neg for &RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        RationalQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        RationalQT { num: -self.num, den: self.den }
    }
}

impl fmt::Display for RationalQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BiPoly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
