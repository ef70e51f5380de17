//! The involution `f ↦ f*` fixes Macdonald polynomials up to a power of `t`.

use macpoly::macdonald::{kl_star, nonsymmetric_e, partial_p};
use macpoly::symgroup::inv_stats;
use macpoly::Composition;

fn main() -> macpoly::Result<()> {
    for shape in ["0,1", "1,0,1", "0,2,1"] {
        let mu: Composition = shape.parse()?;
        let e = nonsymmetric_e(&mu);
        let fixed = kl_star(&e)? == e.mul_qt(0, mu.inv() as i32);
        println!("E_({shape})* = t^{} E_({shape}): {fixed}", mu.inv());
    }
    let (lambda, gamma): (Composition, Composition) = ("2,1".parse()?, "0,1".parse()?);
    let p = partial_p(&lambda, &gamma)?;
    let (_, inv) = inv_stats(&lambda, &gamma);
    println!("P_(2,1|0,1)* = t^{inv} P_(2,1|0,1): {}", kl_star(&p)? == p.mul_qt(0, inv as i32));
    println!("star twice is the identity: {}", kl_star(&kl_star(&p)?)? == p);
    Ok(())
}
