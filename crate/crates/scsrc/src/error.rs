//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The instance contains no strings.
    #[error("empty instance")]
    EmptyInstance,

    /// The instance is too small for the cycle-cover machinery (m < 2).
    #[error("instance too small: {0}")]
    TooSmall(String),

    /// No perfect matching exists in the given graph.
    #[error("no perfect matching exists")]
    Infeasible,

    /// An exact oracle was asked to exceed its enumeration budget.
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A cycle handed to an operation is malformed.
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    /// A solution handed to a decoder is malformed or corrupted.
    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    /// An internal invariant failed; this signals an implementation bug.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    /// A problem in an instance file, with the offending line number (1-based).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
