//! Exact enumeration of binary words by their maximal runs.
//!
//! [`counts`] computes how many words of length `n` starting with 0 contain
//! exactly `k` maximal runs of length `r`, both from a rational generating
//! function ([`series`]) and from a three-term recursion, and turns those
//! counts into exact run-count distributions. [`oracle`] enumerates words
//! directly and is what everything else is checked against.

pub mod cli;
pub mod counts;
pub mod error;
pub mod oracle;
pub mod series;
pub mod verify;

pub use counts::{
    count_all_words, count_exact_runs, count_success_runs, pmf, w_count, BigCount, CountTriple,
    DyadicProb, Pmf,
};
pub use error::Error;
pub use series::{
    series_from_rational, series_mul, series_pow, w_series, Polynomial, TruncatedSeries,
};
