//! Crate-wide error type. Every fallible operation returns [`Result`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A universe was declared with the same label twice.
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),

    /// Universes are capped at 64 elements (subsets are 64-bit masks).
    #[error("universe has {0} labels; at most 64 are supported")]
    UniverseTooLarge(usize),

    /// A label was used that the universe does not declare.
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    /// Two operands were built over different universes.
    #[error("operands belong to different universes")]
    UniverseMismatch,

    /// A family was used as a nest but contains an incomparable pair.
    #[error("family is not a nest: {{{0}}} and {{{1}}} are ⊆-incomparable")]
    NotANest(String, String),

    /// An exhaustive-mode operation was asked to run beyond its size cap.
    #[error("{op} requires n ≤ {cap}, got n = {n}")]
    SizeCap {
        op: &'static str,
        cap: usize,
        n: usize,
    },

    /// A conditional check was invoked on an instance outside its hypothesis.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// An operation's precondition failed (e.g. a non-transitive relation).
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("unknown sample kind `{0}`")]
    UnknownSampleKind(String),

    /// Bad run configuration (flag combinations, unsupported modes, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Malformed textual input (JSON handled separately via `Json`).
    #[error("invalid input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
