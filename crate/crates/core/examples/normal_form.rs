//! Reduce a few products to normal form.
//!
//!     cargo run --example normal_form -- "x2*x1*x0"

use qdg::boxtilde::BoxAlgebra;
use qdg::expr;

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let defaults = ["x1*x0", "x3*x0", "x1*x2*x0", "(x0 + x1)^2", "c0*c0^-1*x1"];
    let list: Vec<&str> =
        if inputs.is_empty() { defaults.to_vec() } else { inputs.iter().map(String::as_str).collect() };
    for s in list {
        let e = expr::parse_box(&alg, s)?;
        println!("{s}\n  = {e}\n  ({} terms)", e.num_terms());
    }
    Ok(())
}
