use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DspError {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("symbol has zero energy")]
    ZeroEnergy,
    #[error("oversampling factor must be at least 1")]
    InvalidOversampling,
    #[error("invalid carrier plan: {0}")]
    InvalidPlan(String),
    #[error("expected {expected} bits, got {got}")]
    BitCount { expected: usize, got: usize },
    #[error("unknown constellation `{0}`")]
    UnknownConstellation(String),
}
