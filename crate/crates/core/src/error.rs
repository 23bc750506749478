use thiserror::Error;

/// Malformed textual input, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self { pos, msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid knot code: {0}")]
    InvalidCode(String),
    #[error("not a knot: {0}")]
    NotAKnot(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("minor enumeration needs {needed} determinants, over the limit of {limit}")]
    TooManyMinors { needed: u128, limit: u128 },
    #[error("table error: {0}")]
    Table(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
