use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("not a regular sequence: dim V(f) = {dim}, expected {expected}")]
    NotRegularSequence { dim: i64, expected: i64 },
    #[error("{0} has a term of degree < 2")]
    NotInSquareOfMaximalIdeal(String),
    #[error("{0} is not homogeneous")]
    NonHomogeneous(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("index {index} outside the computed window [{low}, {high}]")]
    WindowOutOfRange { index: i64, low: i64, high: i64 },
    #[error("syzygy index {n} is below the homology bound {bound}")]
    BoundTooLow { n: i64, bound: i64 },
    #[error("d~^2 does not decompose over f: {0}")]
    DecompositionFailed(String),
    #[error("operators computed to {have}, need {need}")]
    InsufficientDepth { need: usize, have: usize },
    #[error("coefficient module is not of finite length")]
    NotFiniteLength,
    #[error("stabilization not reached: {0}")]
    StabilizationNotReached(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("Ext^{degree}(M, R) does not vanish")]
    VanishingFailed { degree: usize },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
