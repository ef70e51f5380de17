//! Shared test fixtures: random polynomials and a numeric model of the
//! operators, built from closures and never from the symbolic code.

#![allow(dead_code)]

use std::rc::Rc;

use macpoly::coeff::{rat, BiPoly, Q};
use macpoly::{Composition, RationalQT, XPoly};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn comp(v: &[u32]) -> Composition {
    Composition(v.to_vec())
}

/// All compositions with `n` parts and size at most `d`, built with a plain
/// odometer.
pub fn compositions(n: usize, d: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut v = vec![0u32; n];
    loop {
        if v.iter().sum::<u32>() <= d {
            out.push(Composition(v.clone()));
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            v[k] += 1;
            if v[k] <= d {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

pub fn small_rational<R: Rng>(r: &mut R) -> Q {
    let mut num = 0i64;
    while num == 0 {
        num = r.gen_range(-19..=19);
    }
    rat(num, r.gen_range(1..=6))
}

/// Random coefficient `a + b q + c t` with small integers, nonzero.
pub fn random_coeff<R: Rng>(r: &mut R) -> RationalQT {
    loop {
        let p = BiPoly::from_terms([
            (Q::from_integer(r.gen_range(-3i64..=3).into()), 0, 0),
            (Q::from_integer(r.gen_range(-2i64..=2).into()), 1, 0),
            (Q::from_integer(r.gen_range(-2i64..=2).into()), 0, 1),
        ]);
        if !p.is_zero() {
            return RationalQT::from_poly(p);
        }
    }
}

/// Random polynomial in `n` variables of degree at most `deg`.
pub fn random_poly<R: Rng>(r: &mut R, n: usize, deg: u32, terms: usize) -> XPoly {
    XPoly::from_terms(
        n,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            let total = r.gen_range(0..=deg);
            for _ in 0..total {
                e[r.gen_range(0..n)] += 1;
            }
            (e, random_coeff(r))
        }),
    )
}

/// Random element of ℚ(q,t) with small numerator and denominator.
pub fn random_rational_function<R: Rng>(r: &mut R) -> RationalQT {
    let poly = |r: &mut R| {
        BiPoly::from_terms((0..r.gen_range(1..=3)).map(|_| {
            (Q::from_integer(r.gen_range(-4i64..=4).into()), r.gen_range(0..=2), r.gen_range(0..=2))
        }))
    };
    loop {
        let (a, b) = (poly(r), poly(r));
        if !b.is_zero() {
            return RationalQT::new(a, b).unwrap();
        }
    }
}

/// A point `(q, t, x)`.
#[derive(Clone, Debug)]
pub struct Point {
    pub q: Q,
    pub t: Q,
    pub x: Vec<Q>,
}

/// Random point with distinct `x` coordinates. `q` and `t` are powers of
/// two distinct primes, so no `1 - q^a t^b` with `(a, b) ≠ (0, 0)` vanishes.
pub fn random_point<R: Rng>(r: &mut R, n: usize) -> Point {
    const PRIMES: [i64; 5] = [2, 3, 5, 7, 11];
    let i = r.gen_range(0..PRIMES.len());
    let j = (i + r.gen_range(1..PRIMES.len())) % PRIMES.len();
    let param = |p: i64, r: &mut R| {
        let v = Q::from_integer(p.into());
        if r.gen_bool(0.5) {
            v.recip()
        } else {
            v
        }
    };
    let q = param(PRIMES[i], r);
    let t = param(PRIMES[j], r);
    let mut x: Vec<Q> = Vec::new();
    while x.len() < n {
        let v = small_rational(r);
        if !x.contains(&v) {
            x.push(v);
        }
    }
    Point { q, t, x }
}

/// A function of `(q, t, x)`, evaluated numerically.
pub type NumFn = Rc<dyn Fn(&Point) -> Q>;

pub fn numeric(f: &XPoly) -> NumFn {
    let f = f.clone();
    Rc::new(move |p: &Point| f.eval(&p.q, &p.t, &p.x).expect("point off the poles"))
}

/// `T_i g = t g(σ_i x) + (t-1) x_{i+1} (g(σ_i x) - g(x)) / (x_i - x_{i+1})`.
pub fn num_t(i: usize, g: NumFn) -> NumFn {
    Rc::new(move |p: &Point| {
        let mut s = p.clone();
        s.x.swap(i - 1, i);
        let (gs, g0) = (g(&s), g(p));
        &p.t * &gs + (&p.t - Q::one()) * &p.x[i] * (&gs - &g0) / (&p.x[i - 1] - &p.x[i])
    })
}

/// `T_i⁻¹ = t⁻¹ T_i + (t⁻¹ - 1)`.
pub fn num_t_inv(i: usize, g: NumFn) -> NumFn {
    let tg = num_t(i, g.clone());
    Rc::new(move |p: &Point| {
        let ti = p.t.recip();
        &ti * tg(p) + (&ti - Q::one()) * g(p)
    })
}

/// `g(q⁻¹, t⁻¹, x)`.
pub fn num_param_invert(g: NumFn) -> NumFn {
    Rc::new(move |p: &Point| g(&Point { q: p.q.recip(), t: p.t.recip(), x: p.x.clone() }))
}

/// `g` with `x_i` replaced by `q^{k_i} x_{s_i}` (one-based sources).
pub fn num_substitute(g: NumFn, spec: Vec<(usize, i32)>) -> NumFn {
    Rc::new(move |p: &Point| {
        let x = spec.iter().map(|&(s, k)| &p.x[s - 1] * qpow(&p.q, k)).collect();
        g(&Point { q: p.q.clone(), t: p.t.clone(), x })
    })
}

pub fn qpow(base: &Q, k: i32) -> Q {
    let mut v = Q::one();
    for _ in 0..k.unsigned_abs() {
        v *= base;
    }
    if k < 0 {
        v.recip()
    } else {
        v
    }
}

pub fn num_scale_qt(g: NumFn, a: i32, b: i32) -> NumFn {
    Rc::new(move |p: &Point| g(p) * qpow(&p.q, a) * qpow(&p.t, b))
}

/// `T_{i_1} ⋯ T_{i_ℓ}` as an operator product.
pub fn num_word(word: &[usize], mut g: NumFn) -> NumFn {
    for &i in word.iter().rev() {
        g = num_t(i, g);
    }
    g
}

/// `T_{i_ℓ}⁻¹ ⋯ T_{i_1}⁻¹`, the inverse of [`num_word`].
pub fn num_word_inv(word: &[usize], mut g: NumFn) -> NumFn {
    for &i in word {
        g = num_t_inv(i, g);
    }
    g
}
