use thiserror::Error;

/// Errors raised across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a bijection: value {value} appears more than once")]
    DuplicateValue { value: i64 },

    #[error("value {value} out of range for size {n}")]
    ValueOutOfRange { value: i64, n: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("size {n} exceeds the cap of {cap} for type {kind}")]
    CapExceeded { kind: char, n: usize, cap: usize },

    #[error("{0} is not a Wachs permutation")]
    NotWachs(String),

    #[error("invalid index pair ({i}, {j}): {reason}")]
    InvalidIndex { i: i64, j: i64, reason: &'static str },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("order axiom violated: {0}")]
    OrderViolation(String),

    #[error("poset has no {0}")]
    Unbounded(&'static str),

    #[error("poset is not graded: {0}")]
    NotGraded(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
