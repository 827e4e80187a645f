//! First-order optimality residual of the direct model at a finished run.
//!
//! With the Lagrangian `½‖S_D(c − c_o)‖² + Re(yᴴ(Ac − x)) + μ(‖S_F c‖² − β‖S_D c‖²)`
//! plus the PAPR-set constraint on x, the residual collects
//! * primal feasibility `‖Ac − x‖`;
//! * carrier stationarity `‖S_D(c − c_o) + Aᴴy + 2μ(S_F − βS_D)c‖`, restricted to the
//!   data carriers when β = 0 (the free carriers are then pinned to zero);
//! * x stationarity `ρ‖x − P(x + y/ρ)‖`, P being the PAPR projection;
//! * complementary slackness and multiplier sign.

use dsp_core::{cvec, CarrierPlan, Complex64, FreqSymbol, Ofdm};
use subproblems::{x_update, SubproblemError};

use crate::engine::DirectState;
use crate::error::EngineError;
use crate::params::AdmmParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KktBreakdown {
    pub primal: f64,
    pub grad_c: f64,
    pub grad_x: f64,
    pub slackness: f64,
    pub dual_sign: f64,
}

impl KktBreakdown {
    pub fn max(&self) -> f64 {
        [self.primal, self.grad_c, self.grad_x, self.slackness, self.dual_sign].into_iter().fold(0.0, f64::max)
    }
}

pub fn direct_kkt_residual(
    ofdm: &Ofdm,
    plan: &CarrierPlan,
    params: &AdmmParams,
    c_o: &FreqSymbol,
    state: &DirectState,
    mu: f64,
) -> Result<KktBreakdown, EngineError> {
    let ac = ofdm.ifft(&state.c)?;
    let primal = cvec::dist_sqr(&ac, &state.x).sqrt();

    let len = ofdm.len() as f64;
    let ahy = ofdm.fft(&state.y)?;
    let beta = params.beta;
    let mut g2 = 0.0;
    for i in 0..plan.n() {
        let mut g: Complex64 = ahy[i] / len;
        if plan.is_data(i) {
            g += state.c[i] - c_o[i];
            if mu.is_finite() {
                g -= state.c[i] * (2.0 * mu * beta);
            }
        } else if mu.is_finite() {
            g += state.c[i] * (2.0 * mu);
        } else {
            continue;
        }
        g2 += g.norm_sqr();
    }

    let b = cvec::axpy(&state.x, 1.0 / params.rho, &state.y);
    let grad_x = match x_update(&b, params.alpha, &params.bisection) {
        Ok(xu) => params.rho * cvec::dist_sqr(&state.x, &xu.x_next).sqrt(),
        Err(SubproblemError::ZeroInput) => params.rho * cvec::norm(&state.x),
        Err(e) => return Err(EngineError::at(state.k)(e)),
    };

    let (slackness, dual_sign) = if mu.is_finite() {
        let (d, f) = plan.split_energy(&state.c);
        ((mu * (f - beta * d)).abs(), (-mu).max(0.0))
    } else {
        (0.0, 0.0)
    };
    Ok(KktBreakdown { primal, grad_c: g2.sqrt(), grad_x, slackness, dual_sign })
}
