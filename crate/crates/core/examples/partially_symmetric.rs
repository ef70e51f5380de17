//! `P_{λ|γ}`, symmetric in the first `m` variables, and the
//! reversal identity it satisfies.

use macpoly::macdonald::partial_p;
use macpoly::verify::verify_cl;
use macpoly::Composition;

fn main() -> macpoly::Result<()> {
    let lambda: Composition = "1,1".parse()?;
    let gamma: Composition = "0,1".parse()?;
    let p = partial_p(&lambda, &gamma)?;
    println!("P_(1,1|0,1) = {p}");
    println!("symmetric in x1, x2: {}", p.is_symmetric(2));
    println!("symmetric in x1, x2, x3: {}", p.is_symmetric(3));

    let report = verify_cl(&lambda, &gamma)?;
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(())
}
