use thiserror::Error;

/// Errors reported by the library.
///
/// Internal consistency violations (a character sum that fails to be an
/// integer, a coset type whose paired cycle type does not pair up) are bugs
/// and panic instead of returning a variant.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partition weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("n = {n} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("({a},{b},1^{c}) is not a valid near hook")]
    InvalidNearHook { a: usize, b: usize, c: usize },

    #[error("{outer}/{inner} is not a horizontal strip")]
    NotHorizontalStrip { outer: String, inner: String },

    #[error("zero denominator factor {factor} in R({x},{y},{z},{t},{w})")]
    ZeroDenominator {
        factor: &'static str,
        x: i64,
        y: i64,
        z: i64,
        t: i64,
        w: i64,
    },

    #[error("invalid partition `{input}`: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
