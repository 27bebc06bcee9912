use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is not a bijection of [n]: offending value {0}")]
    NotABijection(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid order {0}")]
    InvalidOrder(usize),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("size limit exceeded: n = {n} is over the configured cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("permutation {0} is not bigrassmannian")]
    NotBigrassmannian(String),
    #[error("invalid length vector ({l1},{l2},{l3},{l4})@{n}")]
    InvalidLengthVector {
        l1: usize,
        l2: usize,
        l3: usize,
        l4: usize,
        n: usize,
    },
    #[error("order {0} too small for this statistic")]
    OrderTooSmall(usize),
    #[error("level {level} out of range for order {n}")]
    LevelOutOfRange { n: usize, level: usize },
    #[error("elements are not comparable")]
    NotComparable,
    #[error("empty target set")]
    EmptyTargetSet,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
