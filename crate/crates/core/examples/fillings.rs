//! Non-attacking fillings and their statistics.
//!
//! Prints the worked filling of shape (3,2,2,1,2,3) over basement 132645,
//! then every filling of a small shape with its weight.

use macpoly::fillings::{enumerate_naf, filling_stats, term_weight, worked_example_filling};
use macpoly::{Composition, Perm};

fn main() -> macpoly::Result<()> {
    let f = worked_example_filling();
    let s = filling_stats(&f);
    println!("{f}");
    println!("maj={} |Inv|={} inv={} coinv={}\n", s.maj, s.inv_set_size, s.inv, s.coinv);

    let mu: Composition = "1,0,2".parse()?;
    let pi: Perm = "213".parse()?;
    for f in enumerate_naf(&mu, &pi)? {
        let (exp, coeff) = term_weight(&f);
        println!("{f}");
        println!("x^{exp:?} * {coeff}\n");
    }
    print!("{}", worked_example_filling().to_tikz());
    Ok(())
}
