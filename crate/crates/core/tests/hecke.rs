mod common;

use macpoly::coeff::BiPoly;
use macpoly::macdonald::{
    b_mu, cherednik_y, demazure_lusztig, hecke_apply, hecke_apply_word, hhl_polynomial, kl_star, nonsymmetric_e,
    partial_p, permuted_e_via_hecke, symmetrizer_e, y_eigenvalue,
};
use macpoly::symgroup::coset_underline;
use macpoly::{Perm, RationalQT, XPoly};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

fn t_op(i: usize, f: &XPoly) -> XPoly {
    demazure_lusztig(i, f, false).unwrap()
}

fn x(n: usize, i: usize) -> XPoly {
    XPoly::var(n, i)
}

fn frac(num: BiPoly, den: BiPoly) -> RationalQT {
    RationalQT::new(num, den).unwrap()
}

fn one_minus(p: BiPoly) -> BiPoly {
    &BiPoly::one() - &p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quadratic_and_braid_relations(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 3, 3);
        let t = RationalQT::t();
        for i in 1..n {
            let g = &t_op(i, &f) + &f;
            prop_assert!((&t_op(i, &g) - &g.scale(&t)).is_zero());
            if i + 1 < n {
                prop_assert_eq!(t_op(i, &t_op(i + 1, &t_op(i, &f))), t_op(i + 1, &t_op(i, &t_op(i + 1, &f))));
            }
        }
    }

    #[test]
    fn inverse_contract(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 3, 3);
        let pi = Perm::all(1, n).choose(&mut r).cloned().unwrap();
        let g = hecke_apply(&pi, &f, false).unwrap();
        prop_assert_eq!(hecke_apply(&pi, &g, true).unwrap(), f.clone());
        let h = hecke_apply(&pi, &f, true).unwrap();
        prop_assert_eq!(hecke_apply(&pi, &h, false).unwrap(), f);
    }

    #[test]
    fn reduced_word_independence(seed in any::<u64>(), n in 3usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 2, 3);
        let pi = Perm::all(1, n).choose(&mut r).cloned().unwrap();
        let words = pi.all_reduced_words();
        let first = hecke_apply_word(&words[0], &f, false).unwrap();
        for w in words.choose_multiple(&mut r, 3) {
            prop_assert_eq!(&hecke_apply_word(w, &f, false).unwrap(), &first);
        }
    }

    #[test]
    fn symmetrizer_output_is_symmetric(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 2, 3);
        let m = r.gen_range(0..=n);
        prop_assert!(symmetrizer_e(m, &f).unwrap().is_symmetric(m));
    }

    #[test]
    fn symmetrizer_intertwining(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 2, 3);
        let m = r.gen_range(1..=n);
        let w = Perm::long_element(1, m);
        let e = symmetrizer_e(m, &f).unwrap();
        let lhs = symmetrizer_e(m, &hecke_apply(&w, &f, true).unwrap()).unwrap();
        prop_assert_eq!(lhs, e.mul_qt(0, -(w.length() as i32)));
        for j in m + 1..n {
            let a = symmetrizer_e(m, &demazure_lusztig(j, &f, true).unwrap()).unwrap();
            prop_assert_eq!(a, demazure_lusztig(j, &e, true).unwrap());
        }
    }

    #[test]
    fn operators_match_numeric_model(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 3, 3);
        let i = r.gen_range(1..n);
        let pi = Perm::all(1, n).choose(&mut r).cloned().unwrap();
        let word = pi.reduced_word();
        let nf = numeric(&f);
        let pairs = [
            (t_op(i, &f), num_t(i, nf.clone())),
            (demazure_lusztig(i, &f, true).unwrap(), num_t_inv(i, nf.clone())),
            (hecke_apply_word(&word, &f, false).unwrap(), num_word(&word, nf.clone())),
            (hecke_apply_word(&word, &f, true).unwrap(), num_word_inv(&word, nf.clone())),
        ];
        for _ in 0..4 {
            let p = random_point(&mut r, n);
            for (sym, model) in &pairs {
                prop_assert_eq!(sym.eval(&p.q, &p.t, &p.x).unwrap(), model(&p));
            }
        }
    }
}

#[test]
fn operator_on_variables() {
    let t = RationalQT::t();
    assert_eq!(t_op(1, &x(2, 1)), x(2, 2));
    assert_eq!(t_op(1, &x(2, 2)), &x(2, 1).scale(&t) + &x(2, 2).scale(&(&t - &RationalQT::one())));
    let sym = &x(3, 1) + &x(3, 2);
    assert_eq!(t_op(1, &sym), sym.scale(&t));
    assert!(demazure_lusztig(2, &x(2, 1), false).is_err());
    assert!(demazure_lusztig(0, &x(2, 1), false).is_err());
}

#[test]
fn permuted_basement_by_hand() {
    // E^{21}_{(0,1)} = x_1 + q(1-t)/(1-qt) x_2
    let mu = comp(&[0, 1]);
    let pi: Perm = "21".parse().unwrap();
    let c = frac(&BiPoly::q() * &one_minus(BiPoly::t()), one_minus(&BiPoly::q() * &BiPoly::t()));
    let expected = &x(2, 1) + &x(2, 2).scale(&c);
    assert_eq!(hhl_polynomial(&mu, &pi).unwrap(), expected);
    assert_eq!(permuted_e_via_hecke(&mu, &pi).unwrap(), expected);
    assert_eq!(permuted_e_via_hecke(&mu, &Perm::identity(1, 2)).unwrap(), nonsymmetric_e(&mu));
}

#[test]
fn homogeneous_of_the_shape_degree() {
    for n in 1..=3 {
        for mu in compositions(n, 3) {
            for pi in Perm::all(1, n) {
                assert!(hhl_polynomial(&mu, &pi).unwrap().is_homogeneous(mu.size()), "{mu} over {pi}");
            }
        }
    }
}

#[test]
fn stabilizer_acts_by_t() {
    for n in 2..=3 {
        for mu in compositions(n, 3) {
            let e = nonsymmetric_e(&mu);
            for i in 1..n {
                if mu.part(i) == mu.part(i + 1) {
                    assert_eq!(t_op(i, &e), e.mul_qt(0, 1), "{mu} at {i}");
                }
            }
        }
    }
}

/// For `π ∈ S_m`, the basement only matters up to the stabilizer of `λ`.
#[test]
fn basement_depends_on_the_coset() {
    for (l, g) in [(comp(&[1, 1]), comp(&[0])), (comp(&[2, 1, 1]), comp(&[1])), (comp(&[1, 0, 0]), comp(&[]))] {
        let mu = l.concat(&g);
        let n = mu.len();
        for pi in Perm::all(1, l.len()) {
            let under = coset_underline(&pi, &l).unwrap();
            let a = hhl_polynomial(&mu, &pi.embed(n).unwrap()).unwrap();
            let b = hhl_polynomial(&mu, &under.embed(n).unwrap()).unwrap();
            assert_eq!(a, b, "{mu} with {pi}");
        }
    }
}

#[test]
fn partial_p_small_cases() {
    assert_eq!(partial_p(&comp(&[1, 0]), &comp(&[])).unwrap(), &x(2, 1) + &x(2, 2));
    assert_eq!(partial_p(&comp(&[1]), &comp(&[0])).unwrap(), x(2, 1));
    assert_eq!(partial_p(&comp(&[]), &comp(&[0, 1])).unwrap(), nonsymmetric_e(&comp(&[0, 1])));
    assert!(partial_p(&comp(&[0, 1]), &comp(&[])).is_err());
    let p = partial_p(&comp(&[2, 1, 0]), &comp(&[])).unwrap();
    assert!(p.is_symmetric(3));
    assert_eq!(p.param_invert(), p);
}

#[test]
fn eigenvalue_small_cases() {
    let mu = comp(&[1, 0]);
    assert_eq!(b_mu(&mu, 1, 1), 0);
    let e = nonsymmetric_e(&mu);
    assert_eq!(cherednik_y(1, &e).unwrap(), e.scale(&y_eigenvalue(&mu, 1)));
    assert_eq!(y_eigenvalue(&mu, 1), RationalQT::q());
    assert_eq!(cherednik_y(0, &e).unwrap(), e);
    let mu = comp(&[1, 1, 0]);
    let e = nonsymmetric_e(&mu);
    assert_eq!(cherednik_y(2, &e).unwrap(), e.scale(&y_eigenvalue(&mu, 2)));
}

#[test]
fn symmetrizer_small_cases() {
    assert_eq!(symmetrizer_e(2, &x(2, 1)).unwrap(), &x(2, 1) + &x(2, 2));
    assert_eq!(symmetrizer_e(1, &x(2, 2)).unwrap(), x(2, 2));
    assert!(symmetrizer_e(3, &x(2, 2)).is_err());
}

#[test]
fn star_small_cases() {
    assert_eq!(kl_star(&XPoly::one(3)).unwrap(), XPoly::one(3));
    let e = nonsymmetric_e(&comp(&[0, 1]));
    assert_eq!(kl_star(&e).unwrap(), e);
    let p = partial_p(&comp(&[1]), &comp(&[0])).unwrap();
    assert_eq!(kl_star(&p).unwrap(), p.mul_qt(0, 1));
}
