//! Vacuous reduct semantics for abstract argumentation frameworks.
//!
//! The crate enumerates extensions of the classical Dung-style semantics,
//! combines them with the vacuous reduct combinator `vac(σ, τ)`, and checks
//! correspondence claims and semantic principles by exhaustive and seeded
//! random search over small frameworks.

pub mod af;
pub mod claims;
pub mod enumeration;
pub mod error;
pub mod formats;
pub mod principles;
pub mod semantics;
pub mod vacuous;

pub use af::{ArgSet, ArgumentationFramework, ExtensionSet, Restriction, MAX_ARGUMENTS};
pub use error::{Error, Result};
pub use semantics::ClassicalSemantics;
pub use vacuous::{Evaluator, SemanticsSpec};
