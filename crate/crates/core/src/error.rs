use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter {0:?}: words use only 'x' and 'y'")]
    InvalidLetter(char),

    #[error("invalid letter {0:?}: XY-words use only 'X' and 'Y'")]
    InvalidXyLetter(char),

    #[error("word too long: {len} letters (maximum {max})")]
    WordTooLong { len: usize, max: usize },

    #[error("{0} is not an even word")]
    NotEvenWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("inconsistent arguments: {0}")]
    Inconsistent(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("{what} = {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
