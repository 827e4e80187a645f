use dsp_core::DspError;
use subproblems::SubproblemError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("original symbol has energy on free carriers")]
    FreeCarrierInput,
    #[error("iteration {iteration}: {source}")]
    Subproblem {
        iteration: usize,
        #[source]
        source: SubproblemError,
    },
    #[error(transparent)]
    Dsp(#[from] DspError),
}

impl EngineError {
    pub(crate) fn at(iteration: usize) -> impl FnOnce(SubproblemError) -> Self {
        move |source| Self::Subproblem { iteration, source }
    }
}
