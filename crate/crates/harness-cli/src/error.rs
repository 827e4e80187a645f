use admm_direct::EngineError;
use baseline_rcf::RcfError;
use channel_metrics::ChannelError;
use dsp_core::DspError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl HarnessError {
    /// Process exit status: 2 for bad input, 3 for numerical trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) | HarnessError::Io { .. } => 2,
            HarnessError::Numerical(_) => 3,
        }
    }

    pub(crate) fn numerical(context: impl std::fmt::Display, err: impl std::fmt::Display) -> Self {
        HarnessError::Numerical(format!("{context}: {err}"))
    }
}

impl From<EngineError> for HarnessError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::InvalidParams(m) => HarnessError::Config(m),
            other => HarnessError::Numerical(other.to_string()),
        }
    }
}

impl From<RcfError> for HarnessError {
    fn from(e: RcfError) -> Self {
        match e {
            RcfError::InvalidParams(m) => HarnessError::Config(m),
            other => HarnessError::Numerical(other.to_string()),
        }
    }
}

impl From<ChannelError> for HarnessError {
    fn from(e: ChannelError) -> Self {
        match e {
            ChannelError::InvalidParameter(m) => HarnessError::Config(m),
            ChannelError::CyclicPrefixTooShort { .. } => HarnessError::Config(e.to_string()),
            other => HarnessError::Numerical(other.to_string()),
        }
    }
}

impl From<DspError> for HarnessError {
    fn from(e: DspError) -> Self {
        match e {
            DspError::InvalidOversampling | DspError::InvalidPlan(_) | DspError::UnknownConstellation(_) => {
                HarnessError::Config(e.to_string())
            }
            other => HarnessError::Numerical(other.to_string()),
        }
    }
}
