//! The registry of verifiable identities and their negative controls.
//!
//! Each check evaluates to a difference that must vanish. Every identity
//! has at least one control: a deliberately perturbed variant that must
//! produce a nonzero difference, so the suite cannot pass vacuously.

mod checks;
pub mod fixtures;
mod presentation;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::boxtilde::{BoxAlgebra, BoxElem};
use crate::error::{Error, Result};
use crate::gradings::{ABWord, LiftParams};

pub use fixtures::{CoeffTable, GridTable, Table};
pub use presentation::{tetrahedron_instances, TetGen, WordPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Identity,
    Control,
}

/// Evidence that a difference is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Element(BoxElem),
    Syntactic(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(e) => write!(f, "{e}"),
            Witness::Syntactic(s) => f.write_str(s),
        }
    }
}

/// Outcome of one check.
///
/// For an identity, `witness` is the nonzero difference when it fails. A
/// control passes when its perturbed difference is nonzero; it fails with a
/// syntactic witness when the perturbation goes undetected.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub status: Status,
    pub witness: Option<Witness>,
    pub error: Option<Error>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type CheckFn = Arc<dyn Fn(&Context) -> Result<Option<Witness>> + Send + Sync>;

#[derive(Clone)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    run: CheckFn,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("name", &self.name).field("kind", &self.kind).finish()
    }
}

type Lifts = Vec<(ABWord, BoxElem)>;

/// Shared state for running checks.
pub struct Context {
    pub alg: BoxAlgebra,
    pub tables: Vec<Table>,
    pub seed: u64,
    lifts: Vec<OnceLock<Result<Lifts>>>,
}

/// Longest A/B word whose lift the grading checks expand.
pub const MAX_LIFT_LEN: usize = 8;

impl Context {
    pub fn new(alg: BoxAlgebra, seed: u64) -> Result<Context> {
        let tables = fixtures::load(alg.ring())?;
        Ok(Context { alg, tables, seed, lifts: (0..=MAX_LIFT_LEN).map(|_| OnceLock::new()).collect() })
    }

    pub fn table(&self, name: &str) -> Result<&Table> {
        self.tables.iter().find(|t| t.name() == name).ok_or_else(|| Error::Fixture(format!("no table `{name}`")))
    }

    /// Lifts of all words of length n, computed once.
    pub fn lifts(&self, n: usize) -> Result<&[(ABWord, BoxElem)]> {
        let cell = self.lifts.get(n).ok_or(Error::DegreeCap { n, cap: MAX_LIFT_LEN })?;
        let r = cell.get_or_init(|| {
            let p = LiftParams::symbolic(&self.alg)?;
            crate::gradings::sharp_lift_all(&self.alg, &p, n)
        });
        r.as_ref().map(|v| v.as_slice()).map_err(Clone::clone)
    }
}

/// The full registry, sorted by name.
pub struct Suite {
    checks: Vec<Check>,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

impl Suite {
    pub fn new(ctx: &Context) -> Suite {
        let mut checks = Vec::new();
        checks::register(&mut checks, ctx);
        presentation::register(&mut checks);
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Suite { checks }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.binary_search_by(|c| c.name.as_str().cmp(name)).ok().map(|i| &self.checks[i])
    }
}

impl Check {
    pub(crate) fn new(
        name: impl Into<String>,
        kind: CheckKind,
        run: impl Fn(&Context) -> Result<Option<Witness>> + Send + Sync + 'static,
    ) -> Check {
        Check { name: name.into(), kind, run: Arc::new(run) }
    }

    /// The difference this check computes, before interpreting it.
    pub fn raw(&self, ctx: &Context) -> Result<Option<Witness>> {
        (self.run)(ctx)
    }

    pub fn run(&self, ctx: &Context) -> CheckResult {
        let (status, witness, error) = match (self.kind, self.raw(ctx)) {
            (_, Err(e)) => (Status::Fail, Some(Witness::Syntactic(format!("error: {e}"))), Some(e)),
            (CheckKind::Identity, Ok(None)) => (Status::Pass, None, None),
            (CheckKind::Identity, Ok(Some(w))) => (Status::Fail, Some(w), None),
            (CheckKind::Control, Ok(Some(_))) => (Status::Pass, None, None),
            (CheckKind::Control, Ok(None)) => {
                (Status::Fail, Some(Witness::Syntactic("perturbed identity still holds".into())), None)
            }
        };
        CheckResult { name: self.name.clone(), kind: self.kind, status, witness, error }
    }
}

/// `None` for zero, otherwise the element as a witness.
pub(crate) fn nonzero(e: BoxElem) -> Option<Witness> {
    if e.is_zero() {
        None
    } else {
        Some(Witness::Element(e))
    }
}

/// First nonzero element of a list of differences.
pub(crate) fn first_nonzero(es: Vec<BoxElem>) -> Option<Witness> {
    es.into_iter().find(|e| !e.is_zero()).map(Witness::Element)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ctx = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).unwrap();
        let suite = Suite::new(&ctx);
        let names: Vec<&str> = suite.checks().iter().map(|c| c.name.as_str()).collect();
        assert!(names.windows(2).all(|w| w[0] < w[1]));
        assert!(suite.get("s_commutation.i0.right").is_some());
        assert!(suite.get("nosuch").is_none());
    }

    #[test]
    fn every_identity_has_a_control() {
        let ctx = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).unwrap();
        let suite = Suite::new(&ctx);
        for c in suite.checks().iter().filter(|c| c.kind == CheckKind::Identity) {
            let prefix = format!("control.{}.", c.name);
            assert!(
                suite.checks().iter().any(|k| k.kind == CheckKind::Control && k.name.starts_with(&prefix)),
                "{} has no control",
                c.name
            );
        }
    }

    #[test]
    fn checks_are_repeatable() {
        let ctx = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).unwrap();
        let suite = Suite::new(&ctx);
        let fresh = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).unwrap();
        for c in suite.checks() {
            let (a, b, d) = (c.run(&ctx), c.run(&ctx), c.run(&fresh));
            let render = |r: &CheckResult| (r.status, r.witness.as_ref().map(|w| w.to_string()));
            assert_eq!(render(&a), render(&b), "{}", c.name);
            assert_eq!(render(&a), render(&d), "{}", c.name);
        }
    }

    #[test]
    fn every_table_is_checked() {
        let ctx = Context::new(BoxAlgebra::standard(), DEFAULT_SEED).unwrap();
        let suite = Suite::new(&ctx);
        for t in &ctx.tables {
            assert!(suite.get(&format!("tables.{}", t.name())).is_some(), "{}", t.name());
        }
    }
}
