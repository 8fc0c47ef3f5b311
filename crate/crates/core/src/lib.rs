//! Exact verification of binomial double-sum identities.
//!
//! Everything is computed over the rationals: identity evaluators, a
//! terminating hypergeometric evaluator, and a truncated Laurent-series
//! engine for the generating-function arguments.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hypergeom;
pub mod identities;
pub mod series;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{rat, Rat};
