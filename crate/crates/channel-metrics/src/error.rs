use dsp_core::DspError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChannelError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cyclic prefix of {cp} samples is shorter than the channel delay of {delay} samples")]
    CyclicPrefixTooShort { cp: usize, delay: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("no samples to evaluate")]
    Empty,
    #[error(transparent)]
    Dsp(#[from] DspError),
}
