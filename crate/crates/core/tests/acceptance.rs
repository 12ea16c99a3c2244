//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qdg::boxtilde::oracle::oracle_normal_form;
use qdg::boxtilde::{BoxAlgebra, Strategy};
use qdg::freealg::{dims_table, CROSS_CHECK_SAMPLES, DEFAULT_DEGREE_CAP};
use qdg::identities::{CheckKind, Context, Suite, Witness, DEFAULT_SEED};
use qdg::qcoeff::Ring;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Runs the checks whose names start with one of `prefixes`, expecting `count` of them.
fn suite_group(ctx: &Context, suite: &Suite, prefixes: &[&str], count: usize) -> Outcome {
    let picked: Vec<_> = suite.checks().iter().filter(|c| prefixes.iter().any(|p| c.name.starts_with(p))).collect();
    if picked.len() != count {
        return Err(format!("expected {count} checks, found {}", picked.len()));
    }
    for c in &picked {
        let r = c.run(ctx);
        if !r.passed() {
            return Err(format!("{}: {}", r.name, r.witness.map(|w| w.to_string()).unwrap_or_default()));
        }
    }
    Ok(format!("{count} checks exact"))
}

fn identities(ctx: &Context, suite: &Suite) -> Outcome {
    if !ctx.tables.iter().any(|t| t.name() == "expand") {
        return Err("the four-column expansion table is missing".into());
    }
    let n_tables = ctx.tables.len();
    suite_group(ctx, suite, &["s_commutation.", "tables.", "qdg."], 8 + n_tables + 2)
}

fn general(ctx: &Context, suite: &Suite) -> Outcome {
    suite_group(ctx, suite, &["general_qdg."], 6)
}

fn dims(_: &Context, _: &Suite) -> Outcome {
    let rows = dims_table(&Ring::new(&[]), 8, DEFAULT_DEGREE_CAP, DEFAULT_SEED).map_err(|e| e.to_string())?;
    for r in &rows {
        if r.rank != r.specialized_rank {
            return Err(format!(
                "n={}: rank {} but {} specializations give {}",
                r.n, r.rank, CROSS_CHECK_SAMPLES, r.specialized_rank
            ));
        }
        if r.n <= 3 && r.dim != 1 << r.n {
            return Err(format!("n={}: dim {} is not 2^n", r.n, r.dim));
        }
    }
    if (rows[4].dim, rows[5].dim) != (14, 24) {
        return Err(format!("dims 4, 5 are {}, {}", rows[4].dim, rows[5].dim));
    }
    let v: Vec<String> = rows.iter().map(|r| r.dim.to_string()).collect();
    Ok(format!("dims {}", v.join(" ")))
}

fn confluence(ctx: &Context, _: &Suite) -> Outcome {
    let left = ctx.alg.clone().with_strategy(Strategy::Leftmost);
    let right = ctx.alg.clone().with_strategy(Strategy::Rightmost);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let w = common::random_word(&mut rng, 10);
        let l = left.word(&w).map_err(|e| e.to_string())?;
        let r = right.word(&w).map_err(|e| e.to_string())?;
        let o = oracle_normal_form(ctx.alg.ring(), &w, ctx.alg.limits()).map_err(|e| e.to_string())?;
        if l != r || l != o {
            let names: Vec<&str> = w.iter().map(|g| g.name()).collect();
            return Err(format!("disagreement on {}", names.join("*")));
        }
    }
    Ok("1000 words agree across both strategies and the module model".into())
}

fn gradings(ctx: &Context, suite: &Suite) -> Outcome {
    suite_group(ctx, suite, &["grading.phi.", "grading.product.", "grading.spread."], 5 + 25 + 8)
}

fn automorphisms(ctx: &Context, suite: &Suite) -> Outcome {
    suite_group(ctx, suite, &["automorphism."], 1 + 4 + 2)
}

fn controls(ctx: &Context, suite: &Suite) -> Outcome {
    for must in ["control.s_commutation.i0.right.q3", "control.qdg.first.no_c0"] {
        if suite.get(must).is_none() {
            return Err(format!("{must} is not registered"));
        }
    }
    let mut n = 0;
    for c in suite.checks().iter().filter(|c| c.kind == CheckKind::Control) {
        n += 1;
        match c.raw(ctx) {
            Ok(Some(Witness::Element(e))) if !e.is_zero() => {}
            Ok(Some(Witness::Syntactic(_))) => {}
            Ok(_) => return Err(format!("{} has no nonzero witness", c.name)),
            Err(e) => return Err(format!("{}: {e}", c.name)),
        }
    }
    Ok(format!("{n} controls detected"))
}

fn parser(ctx: &Context, _: &Suite) -> Outcome {
    let lines = common::corpus();
    if lines.len() != 50 {
        return Err(format!("corpus has {} entries", lines.len()));
    }
    let free = Ring::new(&[]);
    for l in &lines {
        common::round_trip(&ctx.alg, &free, l)?;
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qdg::cli::run(["qdg", "nf", "x1*x0"], &mut out, &mut err);
    let want = "q^2 * [x0 | x1 | -] + (1 - q^2) * [- | - | c0]\n";
    if code != 0 || out != want.as_bytes() {
        return Err(format!("nf printed {:?}", String::from_utf8_lossy(&out)));
    }
    Ok("50 round trips stable, nf byte-exact".into())
}

fn main() -> ExitCode {
    let ctx = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).expect("context");
    let suite = Suite::new(&ctx);
    type Criterion = fn(&Context, &Suite) -> Outcome;
    let criteria: [(&str, u64, Criterion); 8] = [
        ("identity suite", 10, identities),
        ("symbolic alpha", 5, general),
        ("graded dimensions", 60, dims),
        ("confluence and oracle", 30, confluence),
        ("grading properties", 60, gradings),
        ("automorphism laws", 60, automorphisms),
        ("negative controls", 60, controls),
        ("parser", 60, parser),
    ];
    let mut failed = 0;
    for (i, (label, secs, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let mut r = f(&ctx, &suite);
        let took = t.elapsed();
        if r.is_ok() && took > Duration::from_secs(secs) {
            r = Err(format!("took {took:.1?}, limit {secs}s"));
        }
        let (tag, detail) = match &r {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {} {tag} {label}: {detail} ({took:.2?})", i + 1);
        failed += r.is_err() as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
