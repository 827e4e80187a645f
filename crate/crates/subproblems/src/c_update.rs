//! Carrier update: minimize `½‖S_D c‖² + (r/2)‖c‖² − Re(cᴴv)` subject to
//! `‖S_F c‖² ≤ β‖S_D c‖²`. Up to a constant this equals
//! `½‖S_D(c − c_o)‖² + (ρ/2)‖Ac − p‖²` when `v = c_o + ρAᴴp` and `r = ρ/ℓN`.

use dsp_core::{cvec, CarrierPlan, Complex64, FreqSymbol};

use crate::error::SubproblemError;

#[derive(Debug, Clone, PartialEq)]
pub struct CUpdateResult {
    pub c_next: FreqSymbol,
    /// Multiplier of the free-carrier bound; `+∞` when β = 0.
    pub mu_star: f64,
}

/// Objective of the carrier subproblem in the `v` form.
pub fn c_objective(c: &[Complex64], v: &[Complex64], plan: &CarrierPlan, r: f64) -> f64 {
    let (d, _) = plan.split_energy(c);
    0.5 * d + 0.5 * r * cvec::norm_sqr(c) - cvec::dot(c, v).re
}

pub fn c_update(
    v: &[Complex64],
    plan: &CarrierPlan,
    beta: f64,
    r: f64,
) -> Result<CUpdateResult, SubproblemError> {
    if v.len() != plan.n() {
        return Err(dsp_core::DspError::LengthMismatch { expected: plan.n(), got: v.len() }.into());
    }
    if !(beta >= 0.0) {
        return Err(SubproblemError::NegativeBeta(beta));
    }
    if !(r > 0.0) {
        return Err(SubproblemError::NonPositiveWeight(r));
    }
    let (d2, f2) = plan.split_energy(v);
    if d2 == 0.0 && f2 == 0.0 {
        return Err(SubproblemError::DegenerateV("v is zero"));
    }

    if beta == 0.0 {
        let c = v
            .iter()
            .enumerate()
            .map(|(i, &vi)| if plan.is_data(i) { vi / (1.0 + r) } else { Complex64::new(0.0, 0.0) })
            .collect();
        return Ok(CUpdateResult { c_next: FreqSymbol::new(c)?, mu_star: f64::INFINITY });
    }
    if d2 == 0.0 {
        return Err(SubproblemError::DegenerateV("v has no data-carrier energy"));
    }

    let (nd, nf) = (d2.sqrt(), f2.sqrt());
    let sb = beta.sqrt();
    let mu = (((1.0 + r) * nf - sb * r * nd) / (2.0 * (beta * nf + sb * nd))).max(0.0);
    let sd = 1.0 / (1.0 + r - 2.0 * mu * beta);
    let sf = 1.0 / (r + 2.0 * mu);
    let c = v
        .iter()
        .enumerate()
        .map(|(i, &vi)| vi * if plan.is_data(i) { sd } else { sf })
        .collect();
    Ok(CUpdateResult { c_next: FreqSymbol::new(c)?, mu_star: mu })
}
