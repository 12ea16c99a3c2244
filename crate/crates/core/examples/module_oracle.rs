//! Compare the rewriting engine with the tensor-module model on one word.

use qdg::boxtilde::oracle::oracle_normal_form;
use qdg::boxtilde::{BoxAlgebra, Gen};

fn main() -> qdg::Result<()> {
    let alg = BoxAlgebra::standard();
    let word: Vec<Gen> = [3, 1, 2, 0, 1, 0].iter().map(|&i| Gen::from_index(i)).collect();
    let names: Vec<&str> = word.iter().map(|g| g.name()).collect();
    let engine = alg.word(&word)?;
    let oracle = oracle_normal_form(alg.ring(), &word, alg.limits())?;
    println!("{}", names.join("*"));
    println!("engine: {engine}");
    println!("agree: {}", engine == oracle);
    Ok(())
}
