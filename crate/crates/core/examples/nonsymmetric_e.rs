//! `E_μ` from non-attacking fillings, printed plain and as LaTeX.

use macpoly::macdonald::nonsymmetric_e;
use macpoly::Composition;

fn main() {
    for shape in ["1,0", "0,1", "0,1,1", "2,0,1"] {
        let mu: Composition = shape.parse().expect("composition");
        let e = nonsymmetric_e(&mu);
        println!("E_({shape}) has {} terms", e.len());
        println!("  {e}");
        println!("  {}", e.to_latex());
    }
}
