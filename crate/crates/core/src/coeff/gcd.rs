//! Greatest common divisors in ℚ[q,t].
//!
//! Polynomials are viewed as elements of ℚ[t][q]. Contents are taken with
//! the univariate Euclidean algorithm over ℚ, and primitive parts are
//! combined with a primitive pseudo-remainder sequence in `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::bipoly::{BiPoly, Q};

/// Dense univariate polynomial in `t`, index = degree, no trailing zeros.
type UPoly = Vec<Q>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_const(p: &UPoly) -> bool {
    p.len() <= 1
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), Q::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Division with remainder over ℚ.
fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Q::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let f = rem.last().unwrap() / lc;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= c * &f;
        }
        quot[shift] = f;
        // the leading coefficient is now exactly zero
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn u_monic(mut p: UPoly) -> UPoly {
    if let Some(lc) = p.last().cloned() {
        if !lc.is_one() {
            for c in p.iter_mut() {
                *c /= &lc;
            }
        }
    }
    p
}

/// Rescales to coprime integer coefficients.
fn u_primitive(p: UPoly) -> UPoly {
    let f = integer_normalizer(p.iter());
    p.into_iter().map(|c| c * &f).collect()
}

/// The rational `f` making every coefficient of `f · p` an integer, with
/// the integers coprime.
fn integer_normalizer<'a>(coeffs: impl Iterator<Item = &'a Q>) -> Q {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in coeffs {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        Q::one()
    } else {
        Q::new(den, num)
    }
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        if u_is_const(&y) {
            return vec![Q::one()];
        }
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = u_primitive(r);
    }
    u_monic(x)
}

/// Polynomial in `q` with coefficients in ℚ[t]; index = q-degree.
type RPoly = Vec<UPoly>;

fn to_recursive(p: &BiPoly) -> RPoly {
    let mut out: RPoly = vec![Vec::new(); p.deg_q() as usize + 1];
    for (&(a, b), c) in p.terms() {
        let slot = &mut out[a as usize];
        if slot.len() <= b as usize {
            slot.resize(b as usize + 1, Q::zero());
        }
        slot[b as usize] = c.clone();
    }
    while out.last().is_some_and(|c| c.is_empty()) {
        out.pop();
    }
    out
}

fn from_recursive(p: &RPoly) -> BiPoly {
    BiPoly::from_terms(p.iter().enumerate().flat_map(|(a, coeffs)| {
        coeffs
            .iter()
            .enumerate()
            .map(move |(b, c)| (c.clone(), a as u32, b as u32))
    }))
}

fn r_content(p: &RPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_monic(c.clone()) } else { u_gcd(&g, c) };
        if u_is_const(&g) {
            return vec![Q::one()];
        }
    }
    g
}

fn r_div_content(p: &RPoly, c: &UPoly) -> RPoly {
    if u_is_const(c) && c[0].is_one() {
        return p.clone();
    }
    p.iter()
        .map(|x| {
            if x.is_empty() {
                Vec::new()
            } else {
                let (q, r) = u_divrem(x, c);
                debug_assert!(r.is_empty());
                q
            }
        })
        .collect()
}

/// Divides out the content in ℚ[t], then rescales to coprime integer
/// coefficients so the remainder sequence stays small.
fn r_primitive(p: &RPoly) -> RPoly {
    let c = r_content(p);
    let prim = r_div_content(p, &c);
    let f = integer_normalizer(prim.iter().flatten());
    prim.into_iter().map(|u| u.into_iter().map(|c| c * &f).collect()).collect()
}

/// Pseudo-remainder of `a` by `b` in ℚ[t][q].
fn r_prem(a: &RPoly, b: &RPoly) -> RPoly {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut rem = a.clone();
    // the exact pseudo-remainder is lc(b)^(deg a - deg b + 1) a mod b
    let mut missing = (a.len() + 1).saturating_sub(b.len());
    while rem.len() > db {
        missing -= 1;
        let shift = rem.len() - 1 - db;
        let lcr = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c = u_mul(c, lcb);
        }
        for (i, c) in b.iter().enumerate() {
            let sub = u_mul(c, &lcr);
            rem[shift + i] = u_sub(&rem[shift + i], &sub);
        }
        while rem.last().is_some_and(|c| c.is_empty()) {
            rem.pop();
        }
    }
    if missing > 0 && !rem.is_empty() {
        let f = u_pow(lcb, missing);
        for c in rem.iter_mut() {
            *c = u_mul(c, &f);
        }
    }
    rem
}

fn swap_qt(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().map(|(&(a, b), c)| (c.clone(), b, a)))
}

/// A greatest common divisor of `a` and `b`, defined up to a unit of ℚ.
pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return BiPoly::one();
    }
    if a == b {
        return a.clone();
    }
    // split off the monomial part, then recurse in whichever variable has
    // the smaller degree
    let (mq, mt) = (a.min_q().min(b.min_q()), a.min_t().min(b.min_t()));
    let a = a.unshift(a.min_q(), a.min_t());
    let b = b.unshift(b.min_q(), b.min_t());
    let g = if a.is_monomial() || b.is_monomial() {
        BiPoly::one()
    } else if a.deg_t().min(b.deg_t()) < a.deg_q().min(b.deg_q()) {
        swap_qt(&prs_gcd(&swap_qt(&a), &swap_qt(&b)))
    } else {
        prs_gcd(&a, &b)
    };
    g.shift(mq, mt)
}

fn u_pow(p: &UPoly, e: usize) -> UPoly {
    (0..e).fold(vec![Q::one()], |acc, _| u_mul(&acc, p))
}

fn u_exact_div(a: &UPoly, b: &UPoly) -> UPoly {
    let (q, r) = u_divrem(a, b);
    assert!(r.is_empty(), "inexact division in the remainder sequence");
    q
}

/// The primitive part of the last nonzero term of the subresultant
/// sequence of `x` and `y` (`deg x ≥ deg y`, both primitive).
fn subresultant_last(mut x: RPoly, mut y: RPoly) -> RPoly {
    let mut g: UPoly = vec![Q::one()];
    let mut h: UPoly = vec![Q::one()];
    loop {
        if y.len() == 1 {
            // primitive and free of the main variable: a unit
            return vec![vec![Q::one()]];
        }
        let d = x.len() - y.len();
        let r = r_prem(&x, &y);
        if r.is_empty() {
            return r_primitive(&y);
        }
        let div = u_mul(&g, &u_pow(&h, d));
        x = y;
        y = r.iter().map(|c| if c.is_empty() { Vec::new() } else { u_exact_div(c, &div) }).collect();
        g = x.last().unwrap().clone();
        h = if d == 0 { h } else { u_exact_div(&u_pow(&g, d), &u_pow(&h, d - 1)) };
    }
}

fn prs_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let ra = to_recursive(a);
    let rb = to_recursive(b);
    let content = u_gcd(&r_content(&ra), &r_content(&rb));
    let (mut x, mut y) = (r_primitive(&ra), r_primitive(&rb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let prim = subresultant_last(x, y);
    let g: RPoly = prim.iter().map(|c| u_mul(c, &content)).collect();
    from_recursive(&g)
}
