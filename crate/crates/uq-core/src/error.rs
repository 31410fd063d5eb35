use thiserror::Error;

/// Errors produced by the kernel and its combinatorial layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Root-system types the kernel refuses to construct (G2, bad ranks).
    #[error("excluded type: {0}")]
    ExcludedType(String),

    /// A Weyl word failed a precondition (not reduced, not w0, ...).
    #[error("invalid Weyl word: {0}")]
    InvalidWord(String),

    /// Inexact division in a ring where only exact division is defined.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// Arithmetic request outside the ring's domain (wrong l, bad parameter).
    #[error("domain error: {0}")]
    Domain(String),

    /// Symbolic computations only run at rank ≤ 2.
    #[error("unsupported rank {0}: symbolic products run at rank <= 2")]
    UnsupportedRank(usize),

    /// Mixed references to different root data or convex orders.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// A closure/partition precondition failed, with a witness.
    #[error("closure violated: {0}")]
    ClosureViolated(String),

    /// Truncated data was too shallow to decide a predicate.
    #[error("undecided at depth {0}: {1}")]
    Undecided(usize, String),

    /// Parse errors, with byte position.
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A certified identity check failed; this falsifies the transcription.
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
