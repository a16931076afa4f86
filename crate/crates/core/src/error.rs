use thiserror::Error;

/// Errors produced by graph construction, the exact oracles and the finders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed edge-list text. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A parameter or vertex set that does not fit the graph.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Exhaustive enumeration refused because the graph is too large.
    #[error("exact mode refused: n = {n} exceeds the exact cap {cap}; use the heuristic instead")]
    CapExceeded { n: usize, cap: usize },

    /// The algorithm's density regime does not apply to this input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A returned witness failed its own certificate. Always a bug.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
