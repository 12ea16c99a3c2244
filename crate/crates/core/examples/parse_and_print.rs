//! Parse, evaluate, print, and parse the printed form again.

use qdg::boxtilde::BoxAlgebra;
use qdg::expr::{self, Mode};
use qdg::qcoeff::Ring;

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    for s in ["q^2*x0*x1 + (1-q^2)*c0", "qint(3)*x2*x0 - a^-1*x3", "-q^2*(x1 + c3^-1)^2"] {
        let e = expr::parse_box(&alg, s)?;
        let again = expr::parse_box(&alg, &e.to_string())?;
        println!("{s}\n  -> {e}\n  stable: {}", again == e);
    }
    let ring = Ring::new(&[]);
    let f = expr::parse_free(&ring, "x^3*y - qint(3)*x^2*y*x + qint(3)*x*y*x^2 - y*x^3")?;
    println!("free: {f}");
    match expr::parse("x0 * x", Mode::Box) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
