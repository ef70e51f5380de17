//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use itertools::Itertools;
use macpoly::fillings::{arm_leg, filling_stats, worked_example_filling};
use macpoly::macdonald::{
    cherednik_y, demazure_lusztig, hecke_apply_word, kl_star, nonsymmetric_e, partial_p, shift_inverse,
    symmetrizer_e,
};
use macpoly::verify::{run_suite, BasementMode, Checker, IdentityCount, Status, SuiteSummary, SweepBounds};
use macpoly::{Composition, Perm, RationalQT, Square, SubstSpec, XPoly};
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let s = filling_stats(&worked_example_filling());
    let got = (s.maj, s.inv_set_size, s.inv, s.coinv);
    ensure(got == (2, 40, 29, 3), || format!("(maj, |Inv|, inv, coinv) = {got:?}"))?;
    let al = arm_leg(&comp(&[4, 3, 3, 2, 3, 4]), &Square::new(3, 2)).map_err(|e| e.to_string())?;
    ensure(al == (2, 1), || format!("(a, l) of (3,2) = {al:?}"))?;
    Ok("maj=2 |Inv|=40 inv=29 coinv=3, a=2 l=1".into())
}

/// Partitions of `(shape, m)` into `λ|γ` with `λ` weakly decreasing.
fn split_pairs(n: usize, d: u32) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for m in 0..=n {
        for mu in compositions(n, d) {
            let (l, g) = mu.parts().split_at(m);
            if Composition(l.to_vec()).is_weakly_decreasing() {
                out.push((Composition(l.to_vec()), Composition(g.to_vec())));
            }
        }
    }
    out
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Instance counts the full sweep must reach, computed from the bounds alone.
fn expected_counts(n_max: usize, d: u32) -> [(&'static str, usize); 6] {
    let (mut hhl, mut comp_, mut pairs, mut comb) = (0, 0, 0, 0);
    for n in 1..=n_max {
        let shapes = compositions(n, d).len();
        hhl += shapes * factorial(n);
        comp_ += shapes * (1..n).map(|m| factorial(m) * factorial(n - m)).sum::<usize>();
        pairs += split_pairs(n, d).len();
        comb += shapes * n;
    }
    [("hhl", hhl), ("complement", comp_), ("cl", pairs), ("kl", pairs), ("eigen", pairs), ("comb", comb)]
}

fn sweep_criterion(summary: &SuiteSummary, id: &str, expected: usize) -> Outcome {
    ensure(summary.errors.is_empty(), || format!("checker errors: {:?}", summary.errors))?;
    let c: &IdentityCount = summary
        .counts
        .iter()
        .find(|c| c.identity_id == id)
        .ok_or_else(|| format!("no count for {id}"))?;
    ensure(c.instances == expected, || format!("{} instances, expected {expected}", c.instances))?;
    if c.fails > 0 {
        let first = summary.first_counterexample.as_ref().map(|r| r.instance.to_string()).unwrap_or_default();
        return Err(format!("{} of {} instances fail, first {first}", c.fails, c.instances));
    }
    Ok(format!("{} instances hold", c.instances))
}

fn star_on_e() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for mu in compositions(n, 3) {
            let e = nonsymmetric_e(&mu);
            let lhs = kl_star(&e).map_err(|e| e.to_string())?;
            ensure(lhs == e.mul_qt(0, mu.inv() as i32), || format!("E_mu^* for mu={mu}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} nonsymmetric instances"))
}

fn random_instance<R: Rng>(r: &mut R) -> (usize, XPoly) {
    let n = r.gen_range(2..=4);
    let terms = r.gen_range(1..=4);
    (n, random_poly(r, n, 3, terms))
}

fn t_op(i: usize, f: &XPoly) -> XPoly {
    demazure_lusztig(i, f, false).expect("index in range")
}

fn t_inv(i: usize, f: &XPoly) -> XPoly {
    demazure_lusztig(i, f, true).expect("index in range")
}

fn hecke_relations() -> Result<usize, String> {
    let mut r = rng(8);
    let t = RationalQT::t();
    for _ in 0..50 {
        let (n, f) = random_instance(&mut r);
        for i in 1..n {
            // (T_i - t)(T_i + 1) f = 0
            let g = &t_op(i, &f) + &f;
            let quad = &t_op(i, &g) - &g.scale(&t);
            ensure(quad.is_zero(), || format!("quadratic relation at i={i} on {f}"))?;
            ensure(t_op(i, &t_inv(i, &f)) == f && t_inv(i, &t_op(i, &f)) == f, || format!("T_{i} inverse on {f}"))?;
            if i + 1 < n {
                let lhs = t_op(i, &t_op(i + 1, &t_op(i, &f)));
                let rhs = t_op(i + 1, &t_op(i, &t_op(i + 1, &f)));
                ensure(lhs == rhs, || format!("braid relation at i={i} on {f}"))?;
            }
            for j in i + 2..n {
                ensure(t_op(i, &t_op(j, &f)) == t_op(j, &t_op(i, &f)), || format!("T_{i} T_{j} commute on {f}"))?;
            }
        }
    }
    Ok(50)
}

fn reduced_words() -> Result<usize, String> {
    let mut r = rng(20);
    let mut pairs = 0;
    while pairs < 20 {
        let (n, f) = random_instance(&mut r);
        let pi = Perm::all(1, n).choose(&mut r).cloned().expect("nonempty");
        let words = pi.all_reduced_words();
        if words.len() < 2 {
            continue;
        }
        let w1 = words.choose(&mut r).expect("nonempty");
        let w2 = words.choose(&mut r).expect("nonempty");
        let a = hecke_apply_word(w1, &f, false).map_err(|e| e.to_string())?;
        let b = hecke_apply_word(w2, &f, false).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("T_pi for {pi} depends on the word: {w1:?} vs {w2:?}"))?;
        let ai = hecke_apply_word(w1, &f, true).map_err(|e| e.to_string())?;
        let bi = hecke_apply_word(w2, &f, true).map_err(|e| e.to_string())?;
        ensure(ai == bi, || format!("T_pi^-1 for {pi} depends on the word"))?;
        pairs += 1;
    }
    Ok(pairs)
}

fn involutions() -> Result<usize, String> {
    let mut count = 0;
    for n in 1..=4 {
        for (l, g) in split_pairs(n, 3) {
            let p = partial_p(&l, &g).map_err(|e| e.to_string())?;
            ensure(p.param_invert().param_invert() == p, || format!("parameter inversion on P_{l}|{g}"))?;
            let s = kl_star(&p).map_err(|e| e.to_string())?;
            ensure(kl_star(&s).map_err(|e| e.to_string())? == p, || format!("star on P_{l}|{g}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// Compares a symbolic result with its numeric model at 20 points.
fn agree(name: &str, sym: &XPoly, model: &NumFn, r: &mut impl Rng) -> Result<(), String> {
    let n = sym.nvars();
    for _ in 0..20 {
        let p = random_point(r, n);
        let v = sym.eval(&p.q, &p.t, &p.x).map_err(|e| e.to_string())?;
        ensure(v == model(&p), || format!("{name} disagrees with its numeric model at {p:?}"))?;
    }
    Ok(())
}

fn numeric_consistency() -> Result<usize, String> {
    let mut r = rng(99);
    let mut ops = 0;
    for _ in 0..10 {
        let (n, f) = random_instance(&mut r);
        let g = random_poly(&mut r, n, 2, 3);
        let (nf, ng) = (numeric(&f), numeric(&g));
        let i = r.gen_range(1..n);
        let (a, b) = (r.gen_range(-2..=2), r.gen_range(-2..=2));
        let pi = Perm::all(1, n).choose(&mut r).cloned().expect("nonempty");
        let word = pi.reduced_word();
        let spec: Vec<(usize, i32)> =
            pi.images().iter().map(|&s| (s, r.gen_range(-1..=1))).collect();
        let m = r.gen_range(0..=n);
        let (nf2, ng2) = (nf.clone(), ng.clone());
        let checks: Vec<(&str, XPoly, NumFn)> = vec![
            ("sum", &f + &g, std::rc::Rc::new(move |p: &Point| nf2(p) + ng2(p))),
            ("product", &f * &g, {
                let (nf, ng) = (nf.clone(), ng.clone());
                std::rc::Rc::new(move |p: &Point| nf(p) * ng(p))
            }),
            ("T_i", t_op(i, &f), num_t(i, nf.clone())),
            ("T_i^-1", t_inv(i, &f), num_t_inv(i, nf.clone())),
            ("T_pi", hecke_apply_word(&word, &f, false).unwrap(), num_word(&word, nf.clone())),
            ("T_pi^-1", hecke_apply_word(&word, &f, true).unwrap(), num_word_inv(&word, nf.clone())),
            ("parameter inversion", f.param_invert(), num_param_invert(nf.clone())),
            (
                "substitution",
                f.substitute(&SubstSpec::new(spec.clone()).unwrap()).unwrap(),
                num_substitute(nf.clone(), spec),
            ),
            ("q^a t^b scaling", f.mul_qt(a, b), num_scale_qt(nf.clone(), a, b)),
            ("shift", shift_inverse(&f), {
                let mut s = vec![(n, 1)];
                s.extend((1..n).map(|k| (k, 0)));
                num_substitute(nf.clone(), s)
            }),
            ("star", kl_star(&f).unwrap(), {
                let w0 = Perm::long_element(1, n);
                let rev: Vec<(usize, i32)> = (1..=n).rev().map(|k| (k, 0)).collect();
                let g = num_substitute(num_param_invert(nf.clone()), rev);
                num_scale_qt(num_word_inv(&w0.reduced_word(), g), 0, w0.length() as i32)
            }),
            ("symmetrizer", symmetrizer_e(m, &f).unwrap(), {
                let parts: Vec<NumFn> =
                    Perm::all(1, m).iter().map(|s| num_word(&s.reduced_word(), nf.clone())).collect();
                std::rc::Rc::new(move |p: &Point| parts.iter().map(|h| h(p)).sum())
            }),
            ("Y", cherednik_y(m, &f).unwrap(), {
                let mut h = nf.clone();
                for _ in 0..m {
                    let mut s = vec![(n, 1)];
                    s.extend((1..n).map(|k| (k, 0)));
                    h = num_substitute(h, s);
                }
                for blk in 1..=m {
                    for j in (blk..blk + n - m).rev() {
                        h = num_t_inv(j, h);
                    }
                }
                num_scale_qt(h, 0, -((m * m.saturating_sub(1) / 2) as i32))
            }),
        ];
        for (name, sym, model) in &checks {
            agree(name, sym, model, &mut r)?;
        }
        ops = checks.len();
    }
    Ok(ops)
}

fn criterion_8() -> Outcome {
    let rel = hecke_relations()?;
    let words = reduced_words()?;
    let inv = involutions()?;
    let ops = numeric_consistency()?;
    Ok(format!(
        "relations on {rel} polynomials, {words} word pairs, involutions on {inv} instances, {ops} operations at 20 points"
    ))
}

fn criterion_9() -> Outcome {
    let report = Checker::with_fault()
        .cl(&comp(&[1]), &comp(&[0, 1]))
        .map_err(|e| e.to_string())?;
    ensure(report.status == Status::Fails, || "perturbed left-hand side still holds".into())?;
    let w = report.witness.as_ref().ok_or("failing report without witness")?;
    ensure(!w.difference.is_zero(), || "zero witness difference".into())?;
    ensure(w.recheck(1).is_some(), || "witness does not re-verify at a random point".into())?;
    let bounds = SweepBounds::new(2, 1, BasementMode::All).map_err(|e| e.to_string())?;
    let summary = run_suite(&bounds, &Checker::with_fault());
    ensure(summary.exit_code == 1, || format!("suite exit code {}", summary.exit_code))?;
    let status = Command::new(env!("CARGO_BIN_EXE_macpoly"))
        .args(["--inject-fault", "suite", "--n-max", "2", "--deg-max", "1"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.code() == Some(1), || format!("cli exit status {status}"))?;
    Ok("failing report with nonzero witness, suite and cli exit 1".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let bounds = SweepBounds::new(4, 3, BasementMode::All).expect("valid bounds");
    let summary = run_suite(&bounds, &Checker::new());
    let expected = expected_counts(4, 3);
    let count = |id: &str| expected.iter().find(|(k, _)| *k == id).expect("known identity").1;

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("worked example statistics", Box::new(criterion_1)),
        ("fillings agree with Hecke operators", Box::new(|| sweep_criterion(&summary, "hhl", count("hhl")))),
        ("complement theorem", Box::new(|| sweep_criterion(&summary, "complement", count("complement")))),
        ("partial symmetry identity", Box::new(|| sweep_criterion(&summary, "cl", count("cl")))),
        (
            "star fixedness",
            Box::new(|| {
                let p = sweep_criterion(&summary, "kl", count("kl"))?;
                Ok(format!("{p}; {}", star_on_e()?))
            }),
        ),
        ("Y eigenvalues", Box::new(|| sweep_criterion(&summary, "eigen", count("eigen")))),
        ("combinatorial lemmas", Box::new(|| sweep_criterion(&summary, "comb", count("comb")))),
        ("algebraic properties", Box::new(criterion_8)),
        ("negative control", Box::new(criterion_9)),
    ];

    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg}", k + 1);
            }
        }
    }
    let counts = summary.counts.iter().map(|c| format!("{}={}", c.identity_id, c.instances)).join(" ");
    println!("sweep n<=4 |mu|<=3: {counts}; total {:.1}s", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
