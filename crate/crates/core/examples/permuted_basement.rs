//! `E_μ^π` two ways: from fillings over the basement `π`, and as
//! `t^{-ℓ_μ(π)} T_π E_μ`.

use macpoly::macdonald::{hhl_polynomial, permuted_e_via_hecke};
use macpoly::{Composition, Perm};

fn main() -> macpoly::Result<()> {
    let mu: Composition = "0,1,2".parse()?;
    for pi in Perm::all(1, mu.len()) {
        let a = hhl_polynomial(&mu, &pi)?;
        let b = permuted_e_via_hecke(&mu, &pi)?;
        println!("basement {pi}: {} terms, agree: {}", a.len(), a == b);
    }
    let pi: Perm = "21".parse()?;
    println!("E^21_(0,1) = {}", hhl_polynomial(&"0,1".parse()?, &pi)?);
    Ok(())
}
