//! `Y_{-ϖ_m}` acts on `E_μ` by the scalar `q^{λ_1+⋯+λ_m} t^{-Σ b_μ(i)}`.

use macpoly::macdonald::{cherednik_y, nonsymmetric_e, y_eigenvalue};
use macpoly::Composition;

fn main() -> macpoly::Result<()> {
    for (shape, m) in [("1,0", 1), ("1,1,0", 2), ("2,1,0,1", 2), ("0,2,1", 0)] {
        let mu: Composition = shape.parse()?;
        let e = nonsymmetric_e(&mu);
        let ev = y_eigenvalue(&mu, m);
        let holds = cherednik_y(m, &e)? == e.scale(&ev);
        println!("mu=({shape}) m={m}: eigenvalue {ev}, holds: {holds}");
    }
    Ok(())
}
