//! Command-line front end: `verify`, `nf` and `dims`.
//!
//! Everything here writes to a caller-supplied sink and returns an exit
//! code, so the binary is a one-line wrapper and tests can drive it
//! in-process.

use std::io::{self, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::boxtilde::{BoxAlgebra, Limits};
use crate::error::Error;
use crate::expr;
use crate::freealg::{self, DimRow, DEFAULT_DEGREE_CAP};
use crate::identities::{Check, CheckResult, Context, Status, Suite, DEFAULT_SEED};
use crate::qcoeff::Ring;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qdg", version, about = "Normal forms and identity checks in the q-deformed box algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the identity checks.
    Verify(VerifyArgs),
    /// Print the normal form of an expression.
    Nf {
        /// e.g. "x1*x0" or "(x0 + x1)^2"
        expr: String,
    },
    /// Tabulate graded dimensions of U+.
    Dims {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run every check (the default).
    #[arg(long, conflicts_with = "check")]
    pub all: bool,
    /// Only checks whose name matches this glob.
    #[arg(long, value_name = "GLOB")]
    pub check: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub schema: u32,
    pub ring: String,
    pub seed: u64,
    pub word_cap: usize,
    pub term_budget: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
    #[serde(skip)]
    pub budget: bool,
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub version: String,
    pub config: Config,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.budget) {
            EXIT_BUDGET
        } else if self.summary.fail > 0 {
            EXIT_FAIL
        } else {
            EXIT_PASS
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            s += &format!("{tag}  {:width$}  {:>6} ms\n", c.name, c.ms);
            if let Some(w) = &c.witness {
                s += &format!("      witness: {w}\n");
            }
        }
        s += &format!("{} passed, {} failed\n", self.summary.pass, self.summary.fail);
        s
    }
}

/// Checks whose name matches `pattern`, or all of them.
pub fn select<'a>(suite: &'a Suite, pattern: Option<&str>) -> Result<Vec<&'a Check>, String> {
    let Some(p) = pattern else {
        return Ok(suite.checks().iter().collect());
    };
    let pat = glob::Pattern::new(p).map_err(|e| format!("bad pattern `{p}`: {e}"))?;
    let out: Vec<&Check> = suite.checks().iter().filter(|c| pat.matches(&c.name)).collect();
    if out.is_empty() {
        return Err(format!("no check matches `{p}`"));
    }
    Ok(out)
}

fn entry(r: CheckResult, ms: u64) -> CheckEntry {
    CheckEntry {
        budget: r.error.as_ref().is_some_and(Error::is_budget),
        name: r.name,
        status: r.status,
        witness: r.witness.map(|w| w.to_string()),
        ms,
    }
}

/// Run `checks` on a pool of `jobs` threads. Output order follows input order.
pub fn run_checks(ctx: &Context, checks: &[&Check], jobs: Option<usize>) -> io::Result<Vec<CheckEntry>> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    let pool = b.build().map_err(io::Error::other)?;
    Ok(pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let t = Instant::now();
                let r = c.run(ctx);
                entry(r, t.elapsed().as_millis() as u64)
            })
            .collect()
    }))
}

pub fn report(ctx: &Context, entries: Vec<CheckEntry>) -> Report {
    let pass = entries.iter().filter(|c| c.status == Status::Pass).count();
    let alg = &ctx.alg;
    Report {
        version: VERSION.to_string(),
        config: Config {
            schema: SCHEMA_VERSION,
            ring: format!(
                "Z[{}]",
                alg.ring().symbols().iter().map(|s| format!("{s}^±1")).collect::<Vec<_>>().join(", ")
            ),
            seed: ctx.seed,
            word_cap: alg.limits().word_cap,
            term_budget: alg.limits().term_budget,
        },
        summary: Summary { pass, fail: entries.len() - pass },
        checks: entries,
    }
}

fn algebra() -> Result<BoxAlgebra, Error> {
    Ok(BoxAlgebra::standard().with_limits(Limits::from_env()?))
}

fn usage(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn error_code(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if e.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_USAGE
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let alg = match algebra() {
        Ok(a) => a,
        Err(e) => return Ok(error_code(err, &e)),
    };
    let ctx = match Context::new(alg, DEFAULT_SEED) {
        Ok(c) => c,
        Err(e) => return Ok(error_code(err, &e)),
    };
    let suite = Suite::new(&ctx);
    let checks = match select(&suite, args.check.as_deref()) {
        Ok(c) => c,
        Err(m) => return Ok(usage(err, m)),
    };
    let rep = report(&ctx, run_checks(&ctx, &checks, args.jobs)?);
    if args.json {
        writeln!(out, "{}", rep.to_json())?;
    } else {
        write!(out, "{}", rep.to_table())?;
    }
    Ok(rep.exit_code())
}

pub fn cmd_nf(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let r = algebra().and_then(|alg| expr::parse_box(&alg, input));
    match r {
        Ok(e) => {
            writeln!(out, "{e}")?;
            Ok(EXIT_PASS)
        }
        Err(e) => Ok(error_code(err, &e)),
    }
}

pub fn render_dims(rows: &[DimRow]) -> String {
    let mut s = format!("{:>3}  {:>6}  {:>6}  {:>6}  {:>6}\n", "n", "2^n", "rank", "dim", "check");
    for r in rows {
        let check = if r.specialized_rank == r.rank { "ok".to_string() } else { r.specialized_rank.to_string() };
        s += &format!("{:>3}  {:>6}  {:>6}  {:>6}  {:>6}\n", r.n, r.words, r.rank, r.dim, check);
    }
    s
}

#[derive(Serialize)]
struct DimsReport<'a> {
    version: &'a str,
    cap: usize,
    rows: &'a [DimRow],
}

pub fn cmd_dims(max: usize, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let rows = match freealg::dims_table(&Ring::new(&[]), max, DEFAULT_DEGREE_CAP, DEFAULT_SEED) {
        Ok(r) => r,
        Err(e) => return Ok(error_code(err, &e)),
    };
    if json {
        let rep = DimsReport { version: VERSION, cap: DEFAULT_DEGREE_CAP, rows: &rows };
        writeln!(out, "{}", serde_json::to_string_pretty(&rep).expect("report serializes"))?;
    } else {
        write!(out, "{}", render_dims(&rows))?;
    }
    // A specialization can only lower the rank.
    Ok(if rows.iter().all(|r| r.specialized_rank == r.rank) { EXIT_PASS } else { EXIT_FAIL })
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { EXIT_PASS } else { EXIT_USAGE };
        }
    };
    let r = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Nf { expr } => cmd_nf(expr, out, err),
        Command::Dims { max, json } => cmd_dims(*max, *json, out, err),
    };
    r.unwrap_or_else(|e| usage(err, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("qdg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn nf_commutes_past_c0() {
        let (code, out, _) = call(&["nf", "x1*x0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "q^2 * [x0 | x1 | -] + (1 - q^2) * [- | - | c0]\n");
        let (code, out, _) = call(&["nf", "x0*x1"]);
        assert_eq!((code, out.as_str()), (0, "[x0 | x1 | -]\n"));
    }

    #[test]
    fn nf_parse_error_is_usage() {
        let (code, _, err) = call(&["nf", "x0 +* x1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("byte"));
        assert_eq!(call(&["nf", "x"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_filter() {
        let (code, out, _) = call(&["verify", "--check", "s_commutation.*", "--json", "--jobs", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 8);
        assert_eq!(v["summary"]["fail"], 0);
        assert_eq!(call(&["verify", "--check", "nosuch"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--all", "--check", "x"]).0, EXIT_USAGE);
    }

    #[test]
    fn dims_cap() {
        let (code, out, _) = call(&["dims", "--max", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        assert_eq!(call(&["dims", "--max", "99"]).0, EXIT_USAGE);
    }
}
