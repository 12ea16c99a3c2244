use thiserror::Error;

/// Errors raised by the arithmetic kernel, the rewriting engine and the parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("cannot specialize symbol `{0}` at zero (symbols are invertible)")]
    ZeroSpecialization(String),

    #[error("expected {expected} specialization values, got {got}")]
    SpecializationArity { expected: usize, got: usize },

    #[error("inexact division")]
    InexactDivision,

    #[error("reduction budget: word of length {len} exceeds the cap of {cap}")]
    ReductionBudget { len: usize, cap: usize },

    #[error("term budget: {terms} terms exceed the budget of {budget}")]
    TermBudget { terms: usize, budget: usize },

    #[error("central exponent overflow")]
    ExponentOverflow,

    #[error("row {row} is not homogeneous of degree {degree}")]
    NonHomogeneous { row: usize, degree: usize },

    #[error("degree {n} exceeds the configured cap of {cap}")]
    DegreeCap { n: usize, cap: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("`{name}` at byte {offset} is not valid in {mode} mode")]
    Mode { offset: usize, name: String, mode: &'static str },

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    /// True for the errors the command line reports as resource exhaustion.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::ReductionBudget { .. } | Error::TermBudget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
