use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    #[error("ground-set mismatch: expected {expected}, found {found}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected} relations, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundTooLarge(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("partial coloring: {colored} of {size} elements colored")]
    PartialColoring { colored: usize, size: usize },
    #[error("enumeration repeats element at positions {first} and {second}")]
    RepeatedElement { first: usize, second: usize },
    #[error("declared profile does not contain the full index set")]
    ProfileMissingFullSet,
    #[error("set tuple contains an empty set at position {0}")]
    EmptySet(usize),
    #[error("witness fails verification")]
    UnverifiedWitness,
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
