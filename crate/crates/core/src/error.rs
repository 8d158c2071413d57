use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension {0}: need n >= {1}")]
    InvalidDimension(usize, usize),

    #[error("matrix data has {got} entries, expected {expected}")]
    BadShape { expected: usize, got: usize },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("phase module needs at least one angle")]
    EmptyPhase,

    #[error("non-finite module parameter")]
    NonFiniteParameter,

    #[error("block index j = {j} out of range 2..={n}")]
    BlockIndex { j: usize, n: usize },

    #[error("block vector has length {got}, expected j - 1 = {expected}")]
    BlockVectorLength { expected: usize, got: usize },

    #[error("block vector is not normalized (norm {norm})")]
    NotUnitVector { norm: f64 },

    #[error("exponent {exponent} out of range 0..{n}")]
    ExponentOutOfRange { exponent: usize, n: usize },

    #[error("no walsh recipe for n = {0} (available for n = 3, 4, 5)")]
    UnsupportedDimension(usize),

    #[error("input is not unitary (unitary error {0:e})")]
    NonUnitary(f64),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
