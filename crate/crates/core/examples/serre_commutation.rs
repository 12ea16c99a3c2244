//! x_{i+1} S_i = q^4 S_i x_{i+1}, and the same on the left with q^-4.

use qdg::boxtilde::BoxAlgebra;

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let q4 = alg.ring().q_pow(4);
    for i in 0..4 {
        let s = alg.s_element(i)?;
        let x = alg.x(i + 1);
        let lhs = alg.mul(&x, &s)?;
        let rhs = alg.mul(&s, &x)?.scale(&q4);
        println!("i={i}: S_i has {} terms, x S_i - q^4 S_i x = {}", s.num_terms(), &lhs - &rhs);
    }
    Ok(())
}
