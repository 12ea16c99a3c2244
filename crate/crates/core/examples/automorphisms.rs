//! The rotation and the scaling automorphisms.

use qdg::boxtilde::{BoxAlgebra, CentralUnit};
use qdg::expr;

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let r = alg.ring();
    let e = expr::parse_box(&alg, "x1*x0 + q*x3*x2^2")?;
    for k in 0..=4 {
        println!("rho^{k}: {}", alg.rho_pow(&e, k)?);
    }
    let a = r.symbol("a").unwrap();
    let b = r.symbol("b").unwrap();
    let al = [
        CentralUnit::scalar(a.clone())?,
        CentralUnit::scalar(a.pow(-1)?)?,
        CentralUnit::scalar(b.clone())?,
        CentralUnit::scalar(b.pow(-1)?)?,
    ];
    let inv = [al[0].inverse()?, al[1].inverse()?, al[2].inverse()?, al[3].inverse()?];
    let g = alg.scale_auto(&al, &e)?;
    println!("g(a, 1/a, b, 1/b): {g}");
    println!("inverse restores: {}", alg.scale_auto(&inv, &g)? == e);
    Ok(())
}
