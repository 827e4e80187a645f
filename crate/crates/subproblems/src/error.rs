use dsp_core::DspError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubproblemError {
    #[error("free-carrier bound must be non-negative, got {0}")]
    NegativeBeta(f64),
    #[error("prox weight must be positive, got {0}")]
    NonPositiveWeight(f64),
    #[error("PAPR target must be at least 1 (linear), got {0}")]
    InvalidAlpha(f64),
    #[error("degenerate c-update input: {0}")]
    DegenerateV(&'static str),
    #[error("x-update input is identically zero")]
    ZeroInput,
    #[error("bisection could not bracket: ‖z(γ)‖² = {norm_sqr} at γ = {gamma_right} after {expansions} expansions")]
    NoBracket { gamma_right: f64, norm_sqr: f64, expansions: usize },
    #[error("invalid bisection settings: {0}")]
    InvalidBisection(&'static str),
    #[error(transparent)]
    Dsp(#[from] DspError),
}
