//! Feasible starting points: `c1` with `‖S_F c1‖² ≤ β‖S_D c1‖²` whose time signal
//! `Ac1` also meets the PAPR target, so that `x = u = w = Ac1` is admissible.
//!
//! A converged direct run supplies such a `c1` up to the solver tolerance;
//! the candidate is accepted only if both constraints hold within `tol`.

use admm_direct::{AdmmDirect, AdmmParams, EngineError};
use dsp_core::{papr, CarrierPlan, FreqSymbol, Ofdm};

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibleStart {
    pub c1: FreqSymbol,
    pub papr: f64,
    pub fcpo: f64,
    pub feasible: bool,
    pub direct_iterations: usize,
}

/// `direct` should allow many iterations with a small `eps`; `tol` is the relative
/// slack accepted on the PAPR target.
pub fn feasible_start(
    ofdm: &Ofdm,
    plan: &CarrierPlan,
    direct: &AdmmParams,
    c_o: &FreqSymbol,
    tol: f64,
) -> Result<FeasibleStart, EngineError> {
    let out = AdmmDirect::new(ofdm.clone(), plan.clone(), *direct)?.solve(c_o)?;
    let ac = ofdm.ifft(&out.c)?;
    let p = papr(&ac)?;
    let fcpo = plan.fcpo(&out.c);
    let feasible = p <= direct.alpha * (1.0 + tol) && fcpo <= direct.beta + 1e-12;
    Ok(FeasibleStart { c1: out.c, papr: p, fcpo, feasible, direct_iterations: out.report.trace.len() })
}
