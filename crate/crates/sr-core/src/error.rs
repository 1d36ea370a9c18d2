use thiserror::Error;

/// Errors produced by the signal-model layer.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("signal length must be odd and positive, got {0}")]
    InvalidLength(usize),
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("Gabor index ({k}, {l}) outside -N..=N for L = {len}")]
    IndexOutOfRange { k: i64, l: i64, len: usize },
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv parse error at line {line}: {msg}")]
    CsvParse { line: usize, msg: String },
}
