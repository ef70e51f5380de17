//! Arithmetic in ℚ(q,t): every value is kept reduced, so equal functions
//! compare equal.

use macpoly::{BiPoly, RationalQT, Q};

fn main() -> macpoly::Result<()> {
    let one = BiPoly::one();
    let (q, t) = (BiPoly::q(), BiPoly::t());
    let a = RationalQT::new(&one - &t, &one - &(&q * &t))?;
    let b = RationalQT::new(&(&one - &t) * &(&one + &q), &(&one - &(&q * &t)) * &(&one + &q))?;
    println!("a = {a}");
    println!("b = {b}  (same value, common factor cancelled)");
    assert_eq!(a, b);

    let sum = &a + &RationalQT::monomial(1, -1);
    println!("a + q/t = {sum}");
    println!("(a + q/t) with q, t inverted = {}", sum.invert_params());

    let third = Q::new(1.into(), 3.into());
    println!("a at q=2, t=1/3: {}", a.eval(&Q::from_integer(2.into()), &third)?);
    match a.eval(&Q::from_integer(1.into()), &Q::from_integer(1.into())) {
        Ok(v) => println!("a at q=t=1: {v}"),
        Err(e) => println!("a at q=t=1: {e}"),
    }
    println!("json: {}", serde_json::to_string(&a).expect("serializable"));
    Ok(())
}
