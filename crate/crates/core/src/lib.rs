//! Exact computation in a q-deformed box algebra and the q-Onsager-type
//! relations it carries.
//!
//! * [`qcoeff`]: Laurent polynomials in q and auxiliary symbols.
//! * [`freealg`]: the free algebra on x, y and the graded dimensions of U⁺_q.
//! * [`boxtilde`]: normal forms, automorphisms and an independent module model.
//! * [`gradings`]: bidegrees, projections and the lift from U⁺_q.
//! * [`identities`]: the registry of verifiable identities.
//! * [`expr`]: parsing and printing.
//! * [`cli`]: the `qdg` command.

pub mod boxtilde;
pub mod cli;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod gradings;
pub mod identities;
pub mod qcoeff;
pub mod rank;

pub use error::{Error, Result};
