use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// All samples share one value in some dimension, so no valid domain box exists.
    #[error("dimension {dim} is degenerate: all {n} samples equal {value}")]
    DegenerateDimension { dim: usize, value: f64, n: usize },

    #[error("operation requires a non-empty sample subset")]
    EmptySubset,

    #[error("sample covariance is singular or not positive definite")]
    SingularCovariance,

    /// A split threshold would coincide with an interval bound or separate nothing.
    #[error("interval [{lower}, {upper}] in dimension {dim} cannot be split at {threshold}")]
    UnsplittableInterval {
        dim: usize,
        lower: f64,
        upper: f64,
        threshold: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown reference case {0:?}")]
    UnknownCase(String),

    #[error("CSV parse error at line {line}: {msg}")]
    Csv { line: usize, msg: String },

    #[error("tree file error at line {line}, column {column}: {msg}")]
    Format {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The reference density is zero at a Monte Carlo sample; the sampler and
    /// pdf disagree about the support.
    #[error("true density is zero at a sample point")]
    DivisionByZeroDensity,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
