//! The coefficient field ℚ(q,t).

mod bipoly;
mod gcd;
mod rational;

pub use bipoly::{BiPoly, Q};
pub use gcd::gcd;
pub use rational::RationalQT;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// One serialized term: numerator and denominator of the rational
/// coefficient as decimal strings, then the exponents of `q` and `t`.
type TermJson = (String, String, u32, u32);

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: Vec<TermJson>,
    den: Vec<TermJson>,
}

fn poly_to_json(p: &BiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(&(a, b), c)| (c.numer().to_string(), c.denom().to_string(), a, b))
        .collect()
}

fn poly_from_json(terms: &[TermJson]) -> Result<BiPoly, Error> {
    let mut out = Vec::with_capacity(terms.len());
    for (n, d, a, b) in terms {
        let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad integer {n:?}")))?;
        let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad integer {d:?}")))?;
        if d == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        out.push((Q::new(n, d), *a, *b));
    }
    Ok(BiPoly::from_terms(out))
}

impl Serialize for RationalQT {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalJson { num: poly_to_json(self.numer()), den: poly_to_json(self.denom()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RationalJson::deserialize(d)?;
        let num = poly_from_json(&raw.num).map_err(serde::de::Error::custom)?;
        let den = poly_from_json(&raw.den).map_err(serde::de::Error::custom)?;
        RationalQT::new(num, den).map_err(serde::de::Error::custom)
    }
}

impl RationalQT {
    /// LaTeX rendering, e.g. `\frac{1 - t}{1 - q t}`.
    pub fn to_latex(&self) -> String {
        let num = bipoly_latex(self.numer());
        if self.denom().is_one() {
            num
        } else {
            format!("\\frac{{{}}}{{{}}}", num, bipoly_latex(self.denom()))
        }
    }
}

pub(crate) fn bipoly_latex(p: &BiPoly) -> String {
    use num_traits::{One, Signed};
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (&(a, b), c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut body = String::new();
        if !abs.is_one() || (a == 0 && b == 0) {
            if abs.is_integer() {
                body.push_str(&abs.to_string());
            } else {
                body.push_str(&format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom()));
            }
        }
        for (var, e) in [("q", a), ("t", b)] {
            match e {
                0 => {}
                1 => body.push_str(var),
                _ => body.push_str(&format!("{var}^{{{e}}}")),
            }
        }
        out.push_str(&body);
    }
    out
}

/// The rational number `n / d`.
pub fn rat(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
