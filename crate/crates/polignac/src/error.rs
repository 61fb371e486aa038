//! Error types shared across the library.

/// Errors reported by library operations.
///
/// Negative *outcomes* (a narrow-tuple search that finds nothing, an empty
/// candidate set) are not errors; operations that can end that way return a
/// dedicated result enum instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The requested range end exceeds the configured sieve ceiling.
    #[error("sieve range end {requested} exceeds ceiling {ceiling}")]
    SieveCeiling { requested: u64, ceiling: u64 },

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The step of an arithmetic progression must divide its offset.
    #[error("progression step {q} does not divide offset {a}")]
    NotDivisible { a: u64, q: u64 },

    /// Input set exceeds the supported size for the quadratic search.
    #[error("set of {len} elements exceeds the supported maximum of {max}")]
    SetTooLarge { len: usize, max: usize },

    /// A text-format input failed to parse.
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A malformed text-format input (census file, tuple text, integer-set file).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number of the offending input line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
