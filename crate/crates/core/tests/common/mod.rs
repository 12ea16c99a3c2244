#![allow(dead_code)]

use qdg::boxtilde::{BoxAlgebra, Gen};
use qdg::expr;
use qdg::qcoeff::Ring;
use rand::Rng;

pub const CORPUS: &str = include_str!("../data/expr_corpus.txt");

pub fn corpus() -> Vec<&'static str> {
    CORPUS.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
}

/// parse, evaluate, print, then parse and evaluate the printed text again.
pub fn round_trip(alg: &BoxAlgebra, free_ring: &Ring, line: &str) -> Result<(), String> {
    let fmt = |e: qdg::Error| format!("{line}: {e}");
    let (first, second) = if let Some(s) = line.strip_prefix("free:") {
        let e = expr::parse_free(free_ring, s).map_err(fmt)?;
        let printed = e.to_string();
        let back = expr::parse_free(free_ring, &printed).map_err(fmt)?;
        if back != e {
            return Err(format!("{line}: `{printed}` evaluates to `{back}`"));
        }
        (printed, back.to_string())
    } else {
        let e = expr::parse_box(alg, line).map_err(fmt)?;
        let printed = e.to_string();
        let back = expr::parse_box(alg, &printed).map_err(fmt)?;
        if back != e {
            return Err(format!("{line}: `{printed}` evaluates to `{back}`"));
        }
        (printed, back.to_string())
    };
    if first != second {
        return Err(format!("{line}: printing is not stable: `{first}` then `{second}`"));
    }
    Ok(())
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Vec<Gen> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| Gen::from_index(rng.gen_range(0..4))).collect()
}

/// Coefficients of 1/∏_{k≥0}(1 − t^{2k+1})² ∏_{k≥1}(1 − t^{2k}) up to t^max.
pub fn series_dims(max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    // multiply by 1/(1 − t^d) in place
    let mut divide = |d: usize| {
        for i in d..=max {
            c[i] += c[i - d];
        }
    };
    for d in 1..=max {
        if d % 2 == 1 {
            divide(d);
            divide(d);
        } else {
            divide(d);
        }
    }
    c
}
