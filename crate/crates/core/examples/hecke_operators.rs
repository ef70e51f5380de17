//! Demazure–Lusztig operators on polynomials: the quadratic and braid
//! relations, and `T_π` through different reduced words.

use macpoly::macdonald::{demazure_lusztig, hecke_apply_word};
use macpoly::{Perm, RationalQT, XPoly};

fn main() -> macpoly::Result<()> {
    let n = 3;
    let f = &XPoly::term(n, vec![2, 0, 1], RationalQT::q()) + &XPoly::var(n, 2);
    println!("f = {f}");
    let t1 = demazure_lusztig(1, &f, false)?;
    println!("T_1 f = {t1}");

    // (T_1 - t)(T_1 + 1) f = 0
    let g = &t1 + &f;
    let quad = &demazure_lusztig(1, &g, false)? - &g.mul_qt(0, 1);
    println!("(T_1 - t)(T_1 + 1) f = {quad}");

    let w0 = Perm::long_element(1, n);
    for word in w0.all_reduced_words() {
        let h = hecke_apply_word(&word, &f, false)?;
        println!("word {word:?}: {} terms, back to f: {}", h.len(), hecke_apply_word(&word, &h, true)? == f);
    }
    Ok(())
}
