//! Lift A/B words into the box algebra and read off their degrees.
//!
//!     cargo run --example sharp_lift -- ABBA

use qdg::boxtilde::BoxAlgebra;
use qdg::gradings::{degrees, phi_n, pi, sharp_lift, ABWord, LiftParams};

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let p = LiftParams::symbolic(&alg)?;
    let arg = std::env::args().nth(1).unwrap_or_else(|| "ABA".into());
    let w = ABWord::parse(&arg).expect("a word in A and B");
    let e = sharp_lift(&alg, &p, &w)?;
    println!("{w}# has {} terms in degrees {:?}", e.num_terms(), degrees(&e));
    let n = w.len() as i64;
    println!("pi_{n}: {}", pi(n, &e));
    println!("phi_n: {}", phi_n(&alg, &p, &w)?);
    println!("plus word: {}", p.plus_word(&alg, &w));
    Ok(())
}
