//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rank below the minimum of the family.
    #[error("rank {rank} is below the minimum {min} for family {family}")]
    Rank {
        family: &'static str,
        rank: usize,
        min: usize,
    },
    /// A token or letter outside the alphabet of the system.
    #[error("unknown generator {token:?} at position {position}")]
    Alphabet { token: String, position: usize },
    /// A word expected to be reduced is not.
    #[error("word is not reduced")]
    NotReduced,
    /// An element expected to be fully commutative is not.
    #[error("element is not fully commutative")]
    NotFc,
    /// The operation is not defined for this input.
    #[error("outside the domain: {0}")]
    Domain(String),
    /// An enumeration exceeded its element ceiling.
    #[error("budget of {limit} elements exceeded")]
    Budget { limit: usize },
    /// An interval symbol with out-of-range endpoints.
    #[error("invalid interval <{m},{n}]")]
    Interval { m: i32, n: i32 },
    /// A hand-built normal form violates a constraint.
    #[error("invalid form: {0}")]
    InvalidForm(String),
    /// A malformed line in a fixture file.
    #[error("fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },
    /// Algebra elements from different systems were combined.
    #[error("system mismatch")]
    SystemMismatch,
}

/// Result alias for the library.
pub type Result<T> = std::result::Result<T, Error>;
