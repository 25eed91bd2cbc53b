use thiserror::Error;

/// What went wrong while reading a one-line window.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("not an integer: {0:?}")]
    NotAnInteger(String),
    #[error("zero entry")]
    Zero,
    #[error("absolute value {value} out of range 1..={rank}")]
    OutOfRange { value: i64, rank: usize },
    #[error("duplicate absolute value {0}")]
    Duplicate(i64),
    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {kind}")]
    Parse {
        position: usize,
        kind: ParseErrorKind,
    },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("not an inverse atom: {0}")]
    NotInverseAtom(String),
    #[error("not atomic: {0}")]
    NotAtomic(String),
    #[error("{what} {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("word has repeated letter {0}")]
    RepeatedLetter(i32),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for malformed input text, as opposed to well-formed input
    /// that violates a mathematical precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
