use thiserror::Error;

/// Errors raised by word arithmetic, automorphism construction and the
/// verification machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("word has odd length {len}, so it lies outside the sign kernel")]
    OddWord { len: usize },

    #[error("endomorphism does not preserve the sign kernel")]
    KernelNotPreserved,

    #[error("map does not descend to rank 2: image of s{generator} does not project to the identity")]
    NotInducible { generator: usize },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("matrix determinant must be +1 or -1, got {0}")]
    DeterminantNotUnit(String),
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
