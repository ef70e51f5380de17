//! Macdonald polynomials and the Hecke operators acting on them.
//!
//! `E_μ^π` is built from non-attacking fillings. The Demazure–Lusztig
//! operators provide an independent route through `E_μ^π = t^{-ℓ_μ(π)} T_π E_μ`.
//! Half-integer powers of `t` never appear: the normalized `Ẽ_μ` and `P̃` are
//! only handled through their integer-power restatements.

use rayon::prelude::*;

use crate::coeff::RationalQT;
use crate::error::{Error, Result};
use crate::fillings::{enumerate_naf, opposite_term_weight, sum_weights, term_weight};
use crate::symgroup::{coset_min_reps, ell_mu, Composition, Perm};
use crate::xpoly::{SubstSpec, XPoly};

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// `Σ_{σ ∈ NAF_μ^π} x^σ q^{maj} t^{coinv} ∏ (1-t)/(1-q^{l+1}t^{a+1})`.
pub fn hhl_polynomial(mu: &Composition, pi: &Perm) -> Result<XPoly> {
    let fillings: Vec<_> = enumerate_naf(mu, pi)?.collect();
    let terms: Vec<_> = fillings.par_iter().map(term_weight).collect();
    Ok(sum_weights(mu.len(), terms))
}

/// `E_μ`, the identity-basement case.
pub fn nonsymmetric_e(mu: &Composition) -> XPoly {
    hhl_polynomial(mu, &Perm::identity(1, mu.len())).expect("identity basement fits")
}

/// The same sum with `maj'` and `coinv'`, which reproduces
/// `E_μ(x; q⁻¹, t⁻¹)` for the identity basement.
pub fn opposite_hhl_polynomial(mu: &Composition, pi: &Perm) -> Result<XPoly> {
    let fillings: Vec<_> = enumerate_naf(mu, pi)?.collect();
    let terms: Vec<_> = fillings.par_iter().map(opposite_term_weight).collect();
    Ok(sum_weights(mu.len(), terms))
}

/// `T_i f` (or `T_i⁻¹ f`) with
/// `T_i f = t σ_i f + (t-1) x_{i+1} (σ_i f - f)/(x_i - x_{i+1})`.
pub fn demazure_lusztig(i: usize, f: &XPoly, inverse: bool) -> Result<XPoly> {
    let n = f.nvars();
    check_index(i, n)?;
    let swapped = f.swap_vars(i);
    let diff = swapped.checked_sub(f)?;
    let shifted = &XPoly::var(n, i + 1) * &diff.div_by_difference(i, i + 1)?;
    if inverse {
        // T_i⁻¹ = t⁻¹ T_i + (t⁻¹ - 1) = σ_i + (1 - t⁻¹)(x_{i+1} ∂ - 1)
        let c = &RationalQT::one() - &RationalQT::monomial(0, -1);
        Ok(&swapped + &(&shifted - f).scale(&c))
    } else {
        let c = &RationalQT::t() - &RationalQT::one();
        Ok(&swapped.mul_qt(0, 1) + &shifted.scale(&c))
    }
}

/// Applies `T_{i_1} ⋯ T_{i_ℓ}` as an operator product, so `T_{i_ℓ}` acts
/// first; with `inverse`, applies `T_{i_ℓ}⁻¹ ⋯ T_{i_1}⁻¹`.
pub fn hecke_apply_word(word: &[usize], f: &XPoly, inverse: bool) -> Result<XPoly> {
    let mut g = f.clone();
    if inverse {
        for &i in word {
            g = demazure_lusztig(i, &g, true)?;
        }
    } else {
        for &i in word.iter().rev() {
            g = demazure_lusztig(i, &g, false)?;
        }
    }
    Ok(g)
}

/// `T_π f` or `T_π⁻¹ f` for `π` on a subinterval of `[1, n]`.
pub fn hecke_apply(pi: &Perm, f: &XPoly, inverse: bool) -> Result<XPoly> {
    if !pi.is_empty() && (pi.start() == 0 || pi.end() > f.nvars()) {
        return Err(Error::IntervalMismatch(pi.start(), pi.end(), 1, f.nvars()));
    }
    hecke_apply_word(&pi.reduced_word(), f, inverse)
}

/// `t^{-ℓ_μ(π)} T_π E_μ`.
pub fn permuted_e_via_hecke(mu: &Composition, pi: &Perm) -> Result<XPoly> {
    permuted_e_from(mu, pi, &nonsymmetric_e(mu))
}

/// As [`permuted_e_via_hecke`] with `E_μ` supplied by the caller.
pub fn permuted_e_from(mu: &Composition, pi: &Perm, e_mu: &XPoly) -> Result<XPoly> {
    let ell = ell_mu(mu, pi)? as i32;
    Ok(hecke_apply(pi, e_mu, false)?.mul_qt(0, -ell))
}

/// `P_{λ|γ} = Σ_{π ∈ S_m^λ} T_π E_{λ|γ}`.
pub fn partial_p(lambda: &Composition, gamma: &Composition) -> Result<XPoly> {
    let reps = coset_min_reps(lambda)?;
    let mu = lambda.concat(gamma);
    let n = mu.len();
    let e = nonsymmetric_e(&mu);
    let parts = reps
        .par_iter()
        .map(|p| hecke_apply(&p.embed(n)?, &e, false))
        .collect::<Result<Vec<_>>>()?;
    XPoly::sum(n, &parts)
}

/// `π⁻¹ f = f(q x_n, x_1, …, x_{n-1})`.
pub fn shift_inverse(f: &XPoly) -> XPoly {
    let n = f.nvars();
    if n == 0 {
        return f.clone();
    }
    let mut entries = vec![(n, 1)];
    entries.extend((1..n).map(|i| (i, 0)));
    f.substitute(&SubstSpec::new(entries).expect("cyclic shift")).expect("matching arity")
}

/// `Y_{-ϖ_m} f`: `π^{-m}`, then the blocks `T_r⁻¹ ⋯ T_{r+k-1}⁻¹` for
/// `r = m, …, 1` (so the `r = 1` block acts first), then `t^{-m(m-1)/2}`.
pub fn cherednik_y(m: usize, f: &XPoly) -> Result<XPoly> {
    let n = f.nvars();
    if m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    let k = n - m;
    let mut g = f.clone();
    for _ in 0..m {
        g = shift_inverse(&g);
    }
    for r in 1..=m {
        for i in (r..r + k).rev() {
            g = demazure_lusztig(i, &g, true)?;
        }
    }
    let e = (m * m.saturating_sub(1) / 2) as i32;
    Ok(g.mul_qt(0, -e))
}

/// `b_μ(i) = |{j < i : λ_j > λ_i}| + |{j > i : λ_j = λ_i}| + |{j : γ_j ≥ λ_i}|`
/// with `λ` the first `m` parts of `μ` and `γ` the rest.
pub fn b_mu(mu: &Composition, m: usize, i: usize) -> usize {
    let (lambda, gamma) = mu.parts().split_at(m);
    let li = lambda[i - 1];
    lambda[..i - 1].iter().filter(|&&l| l > li).count()
        + lambda[i..].iter().filter(|&&l| l == li).count()
        + gamma.iter().filter(|&&g| g >= li).count()
}

/// The predicted eigenvalue `q^{λ_1+⋯+λ_m} t^{-Σ b_μ(i)}` of `Y_{-ϖ_m}` on `E_μ`.
pub fn y_eigenvalue(mu: &Composition, m: usize) -> RationalQT {
    let qpow: u32 = mu.parts()[..m].iter().sum();
    let tpow: usize = (1..=m).map(|i| b_mu(mu, m, i)).sum();
    RationalQT::monomial(qpow as i32, -(tpow as i32))
}

/// `Σ_{σ ∈ S_m} T_σ f`, without the `t^{-ℓ(ω_0)/2}` normalization.
pub fn symmetrizer_e(m: usize, f: &XPoly) -> Result<XPoly> {
    let n = f.nvars();
    if m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    if m <= 1 {
        return Ok(f.clone());
    }
    let parts = Perm::all(1, m)
        .par_iter()
        .map(|s| hecke_apply(s, f, false))
        .collect::<Result<Vec<_>>>()?;
    XPoly::sum(n, &parts)
}

/// `f* = t^{ℓ(ω_0)} T_{ω_0}⁻¹ ω_0(f(q⁻¹, t⁻¹))` with `ω_0 x_i = x_{n+1-i}`.
pub fn kl_star(f: &XPoly) -> Result<XPoly> {
    let n = f.nvars();
    let w0 = Perm::long_element(1, n);
    let g = f.param_invert().permute_vars(w0.images())?;
    let ell = w0.length() as i32;
    Ok(hecke_apply(&w0, &g, true)?.mul_qt(0, ell))
}
