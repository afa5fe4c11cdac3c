use thiserror::Error;

use crate::formats::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument index {index} is out of range for a framework with {len} arguments")]
    MalformedSet { index: usize, len: usize },

    #[error("framework has {requested} arguments, the limit is {limit}")]
    TooLarge { requested: usize, limit: usize },

    #[error("duplicate argument label `{0}`")]
    DuplicateLabel(String),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("unknown semantics `{0}`")]
    UnknownSemantics(String),

    #[error("unknown principle `{0}`")]
    UnknownPrinciple(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("invalid probability `{0}`")]
    InvalidProbability(String),

    #[error("invalid corpus spec `{spec}`: {reason}")]
    InvalidCorpus { spec: String, reason: String },

    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Parse(Vec<Diagnostic>),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
