//! Exact verification of the identities, one checker per identity, and a
//! sweep driver over bounded shapes and basements.
//!
//! Every checker returns a [`VerifyReport`]. A failing report carries both
//! sides and their difference so the counterexample can be replayed.

use std::collections::HashSet;
use std::time::Instant;

use itertools::Itertools;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::{RationalQT, Q};
use crate::error::{Error, Result};
use crate::fillings::{
    attacking, augmented_squares, classify_triple, complement_filling, enumerate_naf, filling_stats, large_count,
    triple_chi_sum, triples, AugFilling, TripleKind,
};
use crate::macdonald::{
    cherednik_y, hecke_apply, hhl_polynomial, kl_star, nonsymmetric_e, opposite_hhl_polynomial, partial_p,
    permuted_e_from, y_eigenvalue,
};
use crate::symgroup::{inv_stats, Composition, Perm};
use crate::xpoly::{SubstSpec, XPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Witness {
    pub lhs: XPoly,
    pub rhs: XPoly,
    pub difference: XPoly,
}

impl Witness {
    fn new(lhs: XPoly, rhs: XPoly) -> Self {
        let difference = &lhs - &rhs;
        Self { lhs, rhs, difference }
    }

    /// Evaluates the difference at random rational points until one avoids
    /// every pole, returning the value there.
    pub fn recheck(&self, seed: u64) -> Option<Q> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.difference.nvars();
        (0..64).find_map(|_| {
            let q0 = random_rational(&mut rng);
            let t0 = random_rational(&mut rng);
            let x0: Vec<Q> = (0..n).map(|_| random_rational(&mut rng)).collect();
            self.difference.eval(&q0, &t0, &x0).ok().filter(|v| !v.is_zero())
        })
    }
}

/// A nonzero rational with small numerator and denominator.
pub fn random_rational<R: Rng>(rng: &mut R) -> Q {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-23..=23);
    }
    Q::new(num.into(), rng.gen_range(1i64..=7).into())
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerifyReport {
    pub identity_id: String,
    pub instance: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// How basements are chosen in a sweep.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasementMode {
    All,
    ConcatenatedOnly,
    Sampled { seed: u64, count: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SweepBounds {
    pub n_max: usize,
    pub degree_max: u32,
    pub basement_mode: BasementMode,
}

impl SweepBounds {
    pub fn new(n_max: usize, degree_max: u32, basement_mode: BasementMode) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: usize::MAX });
        }
        Ok(Self { n_max, degree_max, basement_mode })
    }
}

/// Runs the identity checks. A checker built with [`Checker::with_fault`]
/// adds 1 to one coefficient of every left-hand side before comparing,
/// which gives the harness a known-bad input.
#[derive(Clone, Copy, Debug, Default)]
pub struct Checker {
    fault: bool,
}

fn perturb(p: &XPoly) -> XPoly {
    let exp = match p.terms().next_back() {
        Some((e, _)) => e.to_vec(),
        None => vec![0; p.nvars()],
    };
    p + &XPoly::term(p.nvars(), exp, RationalQT::one())
}

fn perm_json(p: &Perm) -> String {
    p.one_line()
}

fn require_partition(lambda: &Composition) -> Result<()> {
    if lambda.is_weakly_decreasing() {
        Ok(())
    } else {
        Err(Error::NotWeaklyDecreasing(lambda.to_string()))
    }
}

/// Substitution `x_i ↦ x_{src(i)}` for `i ≤ m`, and
/// `x_{m+j} ↦ q x_{n+1-j}` for the remaining positions.
fn reflect_tail(n: usize, m: usize, head: impl Fn(usize) -> usize) -> SubstSpec {
    let entries = (1..=n)
        .map(|i| if i <= m { (head(i), 0) } else { (n + 1 - (i - m), 1) })
        .collect();
    SubstSpec::new(entries).expect("a permutation of the variables")
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fault() -> Self {
        Self { fault: true }
    }

    fn compare(&self, id: &str, instance: Value, lhs: XPoly, rhs: XPoly) -> VerifyReport {
        let lhs = if self.fault { perturb(&lhs) } else { lhs };
        if lhs == rhs {
            VerifyReport { identity_id: id.into(), instance, status: Status::Holds, witness: None, detail: None }
        } else {
            VerifyReport {
                identity_id: id.into(),
                instance,
                status: Status::Fails,
                witness: Some(Witness::new(lhs, rhs)),
                detail: None,
            }
        }
    }

    /// `E^{π_1^c π_2^c}(x) = q^{-p} E^{π_1 π_2}(x_m,…,x_1, q x_n,…,q x_{m+1}; q⁻¹, t⁻¹)`.
    pub fn complement(&self, mu: &Composition, pi1: &Perm, pi2: &Perm) -> Result<VerifyReport> {
        if pi1.is_empty() || pi2.is_empty() {
            return Err(Error::InvalidPermutation("both blocks must be nonempty".into()));
        }
        self.complement_impl(mu, pi1, pi2)
    }

    /// The degenerate form with `π_2` empty and `p = 0`:
    /// `E^{π_1^c}(x) = E^{π_1}(x_n,…,x_1; q⁻¹, t⁻¹)`.
    pub fn complement_allow_empty(&self, mu: &Composition, pi1: &Perm, pi2: &Perm) -> Result<VerifyReport> {
        self.complement_impl(mu, pi1, pi2)
    }

    fn complement_impl(&self, mu: &Composition, pi1: &Perm, pi2: &Perm) -> Result<VerifyReport> {
        let n = mu.len();
        let m = pi1.len();
        if m + pi2.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: m + pi2.len() });
        }
        if (!pi1.is_empty() && pi1.start() != 1) || (!pi2.is_empty() && pi2.start() != m + 1) {
            return Err(Error::NotConcatenated { m });
        }
        let basement = Perm::concat(pi1, pi2)?;
        let complemented = Perm::concat(&pi1.complement(), &pi2.complement())?;
        let p: u32 = mu.parts()[m..].iter().sum();
        let lhs = hhl_polynomial(mu, &complemented)?;
        let rhs = hhl_polynomial(mu, &basement)?
            .param_invert()
            .substitute(&reflect_tail(n, m, |i| m + 1 - i))?
            .mul_qt(-(p as i32), 0);
        let instance = json!({"mu": mu.parts(), "m": m, "pi1": perm_json(pi1), "pi2": perm_json(pi2)});
        Ok(self.compare("complement", instance, lhs, rhs))
    }

    /// `P(x_1,…,x_m, q x_n,…,q x_{m+1}; q⁻¹,t⁻¹)
    ///   = q^{|γ|} t^{inv(γ) - ℓ(ω_0^{[m+1,n]})} T_{ω_0^{[m+1,n]}} P`.
    pub fn cl(&self, lambda: &Composition, gamma: &Composition) -> Result<VerifyReport> {
        require_partition(lambda)?;
        let (m, k) = (lambda.len(), gamma.len());
        let n = m + k;
        let p = partial_p(lambda, gamma)?;
        let lhs = p.param_invert().substitute(&reflect_tail(n, m, |i| i))?;
        let w = Perm::long_element(m + 1, n);
        let tpow = gamma.inv() as i32 - (k * k.saturating_sub(1) / 2) as i32;
        let rhs = hecke_apply(&w, &p, false)?.mul_qt(gamma.size() as i32, tpow);
        let instance = json!({"lambda": lambda.parts(), "gamma": gamma.parts(), "n": n});
        Ok(self.compare("cl", instance, lhs, rhs))
    }

    /// `P_{λ|γ}^* = t^{inv(λ|γ)} P_{λ|γ}`; with `λ` empty this is
    /// `E_γ^* = t^{inv(γ)} E_γ`.
    pub fn kl(&self, lambda: &Composition, gamma: &Composition) -> Result<VerifyReport> {
        require_partition(lambda)?;
        let p = partial_p(lambda, gamma)?;
        let (_, inv) = inv_stats(lambda, gamma);
        let lhs = kl_star(&p)?;
        let rhs = p.mul_qt(0, inv as i32);
        let instance = json!({"lambda": lambda.parts(), "gamma": gamma.parts(), "n": p.nvars()});
        Ok(self.compare("kl", instance, lhs, rhs))
    }

    /// Fillings against `t^{-ℓ_μ(π)} T_π E_μ`.
    pub fn hhl_vs_hecke(&self, mu: &Composition, pi: &Perm) -> Result<VerifyReport> {
        self.hhl_vs_hecke_with(mu, pi, &nonsymmetric_e(mu))
    }

    fn hhl_vs_hecke_with(&self, mu: &Composition, pi: &Perm, e_mu: &XPoly) -> Result<VerifyReport> {
        let lhs = hhl_polynomial(mu, pi)?;
        let rhs = permuted_e_from(mu, pi, e_mu)?;
        let instance = json!({"mu": mu.parts(), "basement": perm_json(pi)});
        Ok(self.compare("hhl", instance, lhs, rhs))
    }

    /// `Y_{-ϖ_m} E_μ = q^{λ_1+⋯+λ_m} t^{-Σ b_μ(i)} E_μ`.
    pub fn eigen(&self, mu: &Composition, m: usize) -> Result<VerifyReport> {
        if m > mu.len() {
            return Err(Error::IndexOutOfRange { index: m, max: mu.len() });
        }
        require_partition(&Composition(mu.parts()[..m].to_vec()))?;
        let e = nonsymmetric_e(mu);
        let lhs = cherednik_y(m, &e)?;
        let rhs = e.scale(&y_eigenvalue(mu, m));
        let instance = json!({"mu": mu.parts(), "m": m});
        Ok(self.compare("eigen", instance, lhs, rhs))
    }

    /// Triple coverage, triple counts, the cyclic description of
    /// coinversion triples, the value complement, the bijection `f` with its
    /// `maj`/`coinv` transfer (when `1 ≤ m < n`), and the opposite formula.
    pub fn combinatorial(&self, mu: &Composition, m: usize) -> Result<VerifyReport> {
        let n = mu.len();
        if m > n {
            return Err(Error::IndexOutOfRange { index: m, max: n });
        }
        let instance = json!({"mu": mu.parts(), "m": m});
        let fail = |detail: String, expected: i64, found: i64| VerifyReport {
            identity_id: "comb".into(),
            instance: instance.clone(),
            status: Status::Fails,
            witness: Some(Witness::new(
                XPoly::constant(n, RationalQT::from_int(expected)),
                XPoly::constant(n, RationalQT::from_int(found)),
            )),
            detail: Some(detail),
        };
        if let Some((detail, expected, found)) = coverage_violation(mu) {
            return Ok(fail(detail, expected, found));
        }
        let ts = triples(mu);
        let with_f = m >= 1 && m < n;
        let p: i64 = mu.parts()[m.min(n)..].iter().map(|&x| x as i64).sum();
        for pi in concatenated_basements(n, m) {
            let fillings: Vec<AugFilling> = enumerate_naf(mu, &pi)?.collect();
            let mut images = HashSet::with_capacity(fillings.len());
            for f in &fillings {
                let s = filling_stats(f);
                let (mut n_inv, mut n_coinv) = (0i64, 0i64);
                for tr in &ts {
                    let chi = triple_chi_sum(f, tr);
                    if !(0..=1).contains(&chi) {
                        return Ok(fail(format!("chi sum of {tr:?} in\n{f}"), 0, chi));
                    }
                    let kind = classify_triple(f, tr);
                    let (a, b, c) = (f.value(&tr.u), f.value(&tr.v), f.value(&tr.w));
                    let cyclic = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
                    let expected = if a != c && cyclic { TripleKind::Coinversion } else { TripleKind::Inversion };
                    if kind != expected {
                        return Ok(fail(format!("cyclic order of {tr:?} in\n{f}"), 0, 1));
                    }
                    match kind {
                        TripleKind::Inversion => n_inv += 1,
                        TripleKind::Coinversion => n_coinv += 1,
                    }
                }
                if n_inv != s.inv {
                    return Ok(fail(format!("inversion triples of\n{f}"), s.inv, n_inv));
                }
                if n_coinv != s.coinv {
                    return Ok(fail(format!("coinversion triples of\n{f}"), s.coinv, n_coinv));
                }
                let sc = filling_stats(&f.value_complement());
                if sc.maj != s.maj_prime || sc.coinv != s.coinv_prime {
                    return Ok(fail(format!("value complement of\n{f}"), s.maj_prime, sc.maj));
                }
                if with_f {
                    let g = complement_filling(f, m)?;
                    if complement_filling(&g, m)? != *f {
                        return Ok(fail(format!("f is not an involution at\n{f}"), 0, 1));
                    }
                    let sg = filling_stats(&g);
                    let expected_maj = s.maj_prime - p + large_count(f, m) as i64;
                    if sg.maj != expected_maj {
                        return Ok(fail(format!("maj transfer at\n{f}"), expected_maj, sg.maj));
                    }
                    if sg.coinv != s.coinv_prime {
                        return Ok(fail(format!("coinv transfer at\n{f}"), s.coinv_prime, sg.coinv));
                    }
                    images.insert(g);
                }
            }
            if with_f {
                let (p1, p2) = pi.split_at(m)?;
                let target = Perm::concat(&p1.complement(), &p2.complement())?;
                let codomain: HashSet<AugFilling> = enumerate_naf(mu, &target)?.collect();
                if images.len() != fillings.len() || images != codomain {
                    return Ok(fail(
                        format!("f is not a bijection onto the fillings with basement {target}"),
                        codomain.len() as i64,
                        images.len() as i64,
                    ));
                }
            }
        }
        let id = Perm::identity(1, n);
        let lhs = opposite_hhl_polynomial(mu, &id)?;
        let rhs = nonsymmetric_e(mu).param_invert();
        Ok(self.compare("comb", instance, lhs, rhs))
    }
}

/// Every attacking pair must lie in exactly one triple as `{u,v}` or
/// `{v,w}`, except basement pairs `(i,0),(i',0)` with `i < i'` and
/// `μ_i ≤ μ_{i'}`, which lie in none.
fn coverage_violation(mu: &Composition) -> Option<(String, i64, i64)> {
    let ts = triples(mu);
    let sq = augmented_squares(mu);
    for (x, y) in sq.iter().tuple_combinations().filter(|(x, y)| attacking(x, y)) {
        let same = |a: &crate::fillings::Square, b: &crate::fillings::Square| (a == x && b == y) || (a == y && b == x);
        let count = ts.iter().filter(|t| same(&t.u, &t.v) || same(&t.v, &t.w)).count() as i64;
        let exempt = x.row == 0 && y.row == 0 && {
            let (i, j) = if x.col < y.col { (x.col, y.col) } else { (y.col, x.col) };
            mu.part(i) <= mu.part(j)
        };
        let expected = i64::from(!exempt);
        if count != expected {
            return Some((format!("attacking pair {x}, {y}"), expected, count));
        }
    }
    None
}

/// Basements `π_1 π_2` with `π_1 ∈ S_{[1,m]}` and `π_2 ∈ S_{[m+1,n]}`; for
/// `m ∈ {0, n}` this is all of `S_n`.
pub fn concatenated_basements(n: usize, m: usize) -> Vec<Perm> {
    let firsts = Perm::all(1, m);
    let seconds = Perm::all(m + 1, n - m);
    firsts
        .iter()
        .cartesian_product(seconds.iter())
        .map(|(a, b)| Perm::concat(a, b).expect("adjacent blocks"))
        .collect()
}

pub fn verify_complement(mu: &Composition, pi1: &Perm, pi2: &Perm) -> Result<VerifyReport> {
    Checker::new().complement(mu, pi1, pi2)
}

pub fn verify_cl(lambda: &Composition, gamma: &Composition) -> Result<VerifyReport> {
    Checker::new().cl(lambda, gamma)
}

pub fn verify_kl(lambda: &Composition, gamma: &Composition) -> Result<VerifyReport> {
    Checker::new().kl(lambda, gamma)
}

pub fn verify_hhl_vs_hecke(mu: &Composition, pi: &Perm) -> Result<VerifyReport> {
    Checker::new().hhl_vs_hecke(mu, pi)
}

pub fn verify_eigen(mu: &Composition, m: usize) -> Result<VerifyReport> {
    Checker::new().eigen(mu, m)
}

pub fn verify_combinatorial(mu: &Composition, m: usize) -> Result<VerifyReport> {
    Checker::new().combinatorial(mu, m)
}

/// Identity ids in suite order.
pub const IDENTITIES: [&str; 6] = ["hhl", "complement", "cl", "kl", "eigen", "comb"];

#[derive(Clone, Debug)]
enum Instance {
    Hhl(Composition, Vec<Perm>),
    Complement(Composition, Perm, Perm),
    Cl(Composition, Composition),
    Kl(Composition, Composition),
    Eigen(Composition, usize),
    Comb(Composition, usize),
}

impl Instance {
    fn run(&self, c: &Checker) -> Result<Vec<VerifyReport>> {
        Ok(match self {
            Instance::Hhl(mu, pis) => {
                let e = nonsymmetric_e(mu);
                pis.iter().map(|p| c.hhl_vs_hecke_with(mu, p, &e)).collect::<Result<_>>()?
            }
            Instance::Complement(mu, a, b) => vec![c.complement(mu, a, b)?],
            Instance::Cl(l, g) => vec![c.cl(l, g)?],
            Instance::Kl(l, g) => vec![c.kl(l, g)?],
            Instance::Eigen(mu, m) => vec![c.eigen(mu, *m)?],
            Instance::Comb(mu, m) => vec![c.combinatorial(mu, *m)?],
        })
    }
}

fn sample<T: Clone>(items: Vec<T>, mode: BasementMode, salt: u64) -> Vec<T> {
    match mode {
        BasementMode::Sampled { seed, count } if count < items.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut idx: Vec<usize> = (0..items.len()).collect();
            idx.shuffle(&mut rng);
            let mut keep = idx[..count].to_vec();
            keep.sort_unstable();
            keep.into_iter().map(|i| items[i].clone()).collect()
        }
        _ => items,
    }
}

/// Deterministic instance list: by `n`, then by degree and lexicographic
/// order of the shape.
fn instances(bounds: &SweepBounds) -> Vec<Instance> {
    let mode = bounds.basement_mode;
    let mut out = Vec::new();
    let mut salt = 0u64;
    for n in 1..=bounds.n_max {
        let shapes = Composition::all_up_to(n, bounds.degree_max);
        for mu in &shapes {
            salt += 1;
            let basements = match mode {
                BasementMode::ConcatenatedOnly => Perm::all(1, n)
                    .into_iter()
                    .filter(|p| p.is_identity() || (1..n).any(|m| p.split_at(m).is_ok()))
                    .collect(),
                _ => sample(Perm::all(1, n), mode, salt),
            };
            out.push(Instance::Hhl(mu.clone(), basements));
        }
        for mu in &shapes {
            for m in 1..n {
                salt += 1;
                for pi in sample(concatenated_basements(n, m), mode, salt) {
                    let (a, b) = pi.split_at(m).expect("concatenated");
                    out.push(Instance::Complement(mu.clone(), a, b));
                }
            }
        }
        let mut pairs = Vec::new();
        for m in 0..=n {
            for mu in &shapes {
                let (l, g) = mu.parts().split_at(m);
                let lambda = Composition(l.to_vec());
                if lambda.is_weakly_decreasing() {
                    pairs.push((lambda, Composition(g.to_vec())));
                }
            }
        }
        out.extend(pairs.iter().cloned().map(|(l, g)| Instance::Cl(l, g)));
        out.extend(pairs.iter().cloned().map(|(l, g)| Instance::Kl(l, g)));
        for mu in &shapes {
            for m in 0..=n {
                if Composition(mu.parts()[..m].to_vec()).is_weakly_decreasing() {
                    out.push(Instance::Eigen(mu.clone(), m));
                }
            }
        }
        for mu in &shapes {
            for m in 0..n {
                out.push(Instance::Comb(mu.clone(), m));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCount {
    pub identity_id: String,
    pub instances: usize,
    pub holds: usize,
    pub fails: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub bounds: SweepBounds,
    pub counts: Vec<IdentityCount>,
    pub total: usize,
    pub failures: usize,
    pub errors: Vec<String>,
    pub elapsed_ms: u128,
    pub first_counterexample: Option<VerifyReport>,
    pub exit_code: i32,
}

/// Runs every checker over the instances within `bounds`. Exit code 0 means
/// every identity held, 1 that a counterexample was found, 2 that a checker
/// raised an error.
pub fn run_suite(bounds: &SweepBounds, checker: &Checker) -> SuiteSummary {
    let start = Instant::now();
    let results: Vec<Result<Vec<VerifyReport>>> = instances(bounds).par_iter().map(|i| i.run(checker)).collect();
    let mut counts: Vec<IdentityCount> = IDENTITIES
        .iter()
        .map(|id| IdentityCount { identity_id: id.to_string(), ..Default::default() })
        .collect();
    let mut errors = Vec::new();
    let mut first = None;
    for r in results {
        match r {
            Ok(reports) => {
                for rep in reports {
                    let slot = counts.iter_mut().find(|c| c.identity_id == rep.identity_id).expect("known identity");
                    slot.instances += 1;
                    if rep.holds() {
                        slot.holds += 1;
                    } else {
                        slot.fails += 1;
                        first.get_or_insert(rep);
                    }
                }
            }
            Err(e) => errors.push(e.to_string()),
        }
    }
    let total = counts.iter().map(|c| c.instances).sum();
    let failures = counts.iter().map(|c| c.fails).sum();
    let exit_code = if !errors.is_empty() {
        2
    } else if failures > 0 {
        1
    } else {
        0
    };
    SuiteSummary {
        bounds: *bounds,
        counts,
        total,
        failures,
        errors,
        elapsed_ms: start.elapsed().as_millis(),
        first_counterexample: first,
        exit_code,
    }
}

/// Exit code for a single report.
pub fn exit_code(report: &VerifyReport) -> i32 {
    if report.holds() {
        0
    } else {
        1
    }
}
