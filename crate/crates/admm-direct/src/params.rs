use dsp_core::db_to_linear;
use subproblems::BisectionConfig;

use crate::error::EngineError;

/// Solver settings. α is a linear PAPR ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmmParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho: f64,
    /// Relaxation weight; ignored by the direct engine.
    pub rho_tilde: f64,
    pub max_iters: usize,
    /// Stop once the iterate-change residual drops below this.
    pub eps: f64,
    pub bisection: BisectionConfig,
}

impl AdmmParams {
    pub fn direct_default() -> Self {
        Self {
            alpha: db_to_linear(4.0),
            beta: 0.15,
            rho: 100.0,
            rho_tilde: 100.0,
            max_iters: 5,
            eps: 1e-8,
            bisection: BisectionConfig::default(),
        }
    }

    pub fn relax_default() -> Self {
        Self { rho: 300.0, rho_tilde: 100.0, ..Self::direct_default() }
    }

    pub fn with_alpha_db(mut self, db: f64) -> Self {
        self.alpha = db_to_linear(db);
        self
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if !(self.alpha >= 1.0) {
            return Err(EngineError::InvalidParams(format!("alpha must be >= 1 (linear), got {}", self.alpha)));
        }
        if !(self.beta >= 0.0) {
            return Err(EngineError::InvalidParams(format!("beta must be >= 0, got {}", self.beta)));
        }
        if !(self.rho > 0.0 && self.rho.is_finite()) {
            return Err(EngineError::InvalidParams(format!("rho must be positive, got {}", self.rho)));
        }
        if !(self.eps >= 0.0) {
            return Err(EngineError::InvalidParams(format!("eps must be >= 0, got {}", self.eps)));
        }
        self.bisection.validate().map_err(|e| EngineError::InvalidParams(e.to_string()))
    }
}
