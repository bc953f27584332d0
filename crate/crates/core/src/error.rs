use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("minimal polynomial has a non-rational root")]
    NonRationalSpectrum,
    #[error("unsupported reflection type: {0}")]
    UnsupportedType(String),
    #[error("angle {0} does not snap to a rational multiple of pi")]
    AngleSnap(f64),
    #[error("negative weight")]
    NegativeWeight,
    #[error("size budget exceeded: {0}")]
    Budget(String),
    #[error("rounding residual {0} exceeds tolerance")]
    Rounding(f64),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
