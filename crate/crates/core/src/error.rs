use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("run length must be at least 1")]
    ZeroRunLength,

    #[error("denominator constant term is {0}; it must be 1 or -1")]
    NonUnitConstant(BigInt),

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("n must be at least 1 for a distribution (got 0)")]
    EmptyDistribution,

    #[error("n = {n} exceeds the enumeration guard of {guard}")]
    EnumerationGuard { n: usize, guard: usize },

    #[error("word of length {len} exceeds the maximum of {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("word {0:?} does not begin with 0")]
    NotInB0(String),
}
