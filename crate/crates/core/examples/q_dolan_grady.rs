//! The q-Dolan/Grady error terms for A = x0 + x1, B = x2 + x3.
//!
//! Prints A^3B - [3]A^2BA + [3]ABA^2 - BA^3 + (q^2 - q^-2)^2 c0 (AB - BA)
//! next to S0 + S1.

use qdg::boxtilde::{BoxAlgebra, BoxElem};
use qdg::qcoeff::qint;

fn serre(alg: &BoxAlgebra, x: &BoxElem, y: &BoxElem) -> qdg::Result<BoxElem> {
    let three = qint(alg.ring(), 3);
    let x2 = alg.mul(x, x)?;
    let x3 = alg.mul(&x2, x)?;
    let mut e = alg.mul(&x3, y)?;
    e -= &alg.product([&x2, y, x])?.scale(&three);
    e += &alg.product([x, y, &x2])?.scale(&three);
    e -= &alg.mul(y, &x3)?;
    Ok(e)
}

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let r = alg.ring();
    let a = &alg.x(0) + &alg.x(1);
    let b = &alg.x(2) + &alg.x(3);
    let d = &r.q_pow(2) - &r.q_pow(-2);
    let comm = &alg.mul(&a, &b)? - &alg.mul(&b, &a)?;
    let lhs = &serre(&alg, &a, &b)? + &alg.mul(&alg.c(0, 1), &comm)?.scale(&(&d * &d));
    let rhs = &alg.s_element(0)? + &alg.s_element(1)?;
    println!("lhs: {} terms", lhs.num_terms());
    println!("S0 + S1: {} terms", rhs.num_terms());
    println!("difference: {}", &lhs - &rhs);
    println!("after c_i = 1: {}", alg.canonical_image(&(&lhs - &rhs))?);
    Ok(())
}
