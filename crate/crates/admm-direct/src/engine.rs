use dsp_core::{cvec, papr, CarrierPlan, FreqSymbol, Ofdm, TimeSymbol};
use subproblems::{c_update, x_update, SubproblemError};

use crate::error::EngineError;
use crate::kkt::direct_kkt_residual;
use crate::params::AdmmParams;

#[derive(Debug, Clone, PartialEq)]
pub struct DirectState {
    pub c: FreqSymbol,
    pub x: TimeSymbol,
    pub y: TimeSymbol,
    pub k: usize,
}

/// One row of the iteration trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectIterate {
    pub k: usize,
    /// ‖Ac − x‖
    pub primal_residual: f64,
    /// ‖Δc‖² + ‖Δx‖²
    pub change_residual: f64,
    pub lagrangian: f64,
    pub mu: f64,
    pub gamma: f64,
    pub papr: f64,
    pub fcpo: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectReport {
    pub trace: Vec<DirectIterate>,
    pub kkt_residual: f64,
    pub converged: bool,
    /// The input already met the PAPR target and was passed through.
    pub bypassed: bool,
    pub warnings: Vec<String>,
    pub final_state: DirectState,
    pub mu_star: f64,
    pub gamma_star: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectOutput {
    pub x: TimeSymbol,
    pub c: FreqSymbol,
    pub report: DirectReport,
}

#[derive(Debug, Clone)]
pub struct AdmmDirect {
    ofdm: Ofdm,
    plan: CarrierPlan,
    params: AdmmParams,
}

/// Rejects originals of the wrong length or with energy on free carriers.
pub fn validate_original(plan: &CarrierPlan, c_o: &[dsp_core::Complex64]) -> Result<(), EngineError> {
    if c_o.len() != plan.n() {
        return Err(dsp_core::DspError::LengthMismatch { expected: plan.n(), got: c_o.len() }.into());
    }
    let (d, f) = plan.split_energy(c_o);
    if f > 1e-24 * (1.0 + d) {
        return Err(EngineError::FreeCarrierInput);
    }
    Ok(())
}

impl AdmmDirect {
    pub fn new(ofdm: Ofdm, plan: CarrierPlan, params: AdmmParams) -> Result<Self, EngineError> {
        params.validate()?;
        if ofdm.n() != plan.n() {
            return Err(EngineError::InvalidParams(format!(
                "transform has {} carriers, plan has {}",
                ofdm.n(),
                plan.n()
            )));
        }
        Ok(Self { ofdm, plan, params })
    }

    pub fn ofdm(&self) -> &Ofdm {
        &self.ofdm
    }

    pub fn plan(&self) -> &CarrierPlan {
        &self.plan
    }

    pub fn params(&self) -> &AdmmParams {
        &self.params
    }

    /// `½‖S_D(c − c_o)‖² + Re(yᴴ(Ac − x)) + (ρ/2)‖Ac − x‖²`
    pub fn lagrangian(&self, c_o: &[dsp_core::Complex64], s: &DirectState, ac: &[dsp_core::Complex64]) -> f64 {
        let r = cvec::sub(ac, &s.x);
        0.5 * self.plan.data_dist_sqr(&s.c, c_o) + cvec::dot(&s.y, &r).re + 0.5 * self.params.rho * cvec::norm_sqr(&r)
    }

    /// The starting point `(c_o, P(Ac_o), 0)`.
    pub fn initial_state(&self, c_o: &FreqSymbol) -> Result<DirectState, EngineError> {
        let ac = self.ofdm.ifft(c_o)?;
        let x = x_update(&ac, self.params.alpha, &self.params.bisection).map_err(EngineError::at(0))?.x_next;
        Ok(DirectState { c: c_o.clone(), x, y: TimeSymbol::zeros(self.ofdm.len()), k: 1 })
    }

    /// One pass of the c-, x- and multiplier updates. Returns the new state,
    /// `Ac` of the new state, μ, γ and an optional warning.
    pub fn step(
        &self,
        c_o: &FreqSymbol,
        s: &DirectState,
    ) -> Result<(DirectState, TimeSymbol, f64, f64, Option<String>), EngineError> {
        let p = &self.params;
        let len = self.ofdm.len() as f64;
        let r = p.rho / len;
        let shifted = cvec::axpy(&s.x, -1.0 / p.rho, &s.y);
        let f = self.ofdm.fft(&shifted)?;
        let v = cvec::axpy(c_o, r, &f);
        let cu = c_update(&v, &self.plan, p.beta, r).map_err(EngineError::at(s.k))?;
        let ac = self.ofdm.ifft(&cu.c_next)?;
        let b = cvec::axpy(&ac, 1.0 / p.rho, &s.y);
        let (x, gamma, warning) = match x_update(&b, p.alpha, &p.bisection) {
            Ok(xu) => (xu.x_next, xu.gamma_star, None),
            Err(SubproblemError::ZeroInput) => (
                TimeSymbol::zeros(b.len()),
                f64::NAN,
                Some(format!("iteration {}: x-update input was zero, x set to 0", s.k)),
            ),
            Err(e) => return Err(EngineError::at(s.k)(e)),
        };
        let y = TimeSymbol::new(cvec::axpy(&s.y, p.rho, &cvec::sub(&ac, &x)))?;
        Ok((DirectState { c: cu.c_next, x, y, k: s.k + 1 }, ac, cu.mu_star, gamma, warning))
    }

    pub fn solve(&self, c_o: &FreqSymbol) -> Result<DirectOutput, EngineError> {
        validate_original(&self.plan, c_o)?;
        let p = &self.params;
        let ac_o = self.ofdm.ifft(c_o)?;
        if papr(&ac_o)? <= p.alpha {
            let state = DirectState { c: c_o.clone(), x: ac_o.clone(), y: TimeSymbol::zeros(ac_o.len()), k: 1 };
            let report = DirectReport {
                trace: Vec::new(),
                kkt_residual: 0.0,
                converged: true,
                bypassed: true,
                warnings: Vec::new(),
                final_state: state,
                mu_star: 0.0,
                gamma_star: f64::NAN,
            };
            return Ok(DirectOutput { x: ac_o, c: c_o.clone(), report });
        }

        let mut state = self.initial_state(c_o)?;
        let mut trace = Vec::with_capacity(p.max_iters);
        let mut warnings = Vec::new();
        let mut converged = false;
        let (mut mu_star, mut gamma_star) = (0.0, f64::NAN);
        for _ in 0..p.max_iters {
            let (next, ac, mu, gamma, warning) = self.step(c_o, &state)?;
            warnings.extend(warning);
            let change = cvec::dist_sqr(&next.c, &state.c) + cvec::dist_sqr(&next.x, &state.x);
            let x_papr = papr(&next.x).unwrap_or(0.0);
            trace.push(DirectIterate {
                k: state.k,
                primal_residual: cvec::dist_sqr(&ac, &next.x).sqrt(),
                change_residual: change,
                lagrangian: self.lagrangian(c_o, &next, &ac),
                mu,
                gamma,
                papr: x_papr,
                fcpo: self.plan.fcpo(&next.c),
            });
            state = next;
            mu_star = mu;
            gamma_star = gamma;
            if change < p.eps {
                converged = true;
                break;
            }
        }
        let kkt = direct_kkt_residual(&self.ofdm, &self.plan, p, c_o, &state, mu_star).map(|b| b.max()).unwrap_or(f64::NAN);
        let report = DirectReport {
            trace,
            kkt_residual: kkt,
            converged,
            bypassed: false,
            warnings,
            final_state: state.clone(),
            mu_star,
            gamma_star,
        };
        Ok(DirectOutput { x: state.x, c: state.c, report })
    }
}

/// Convenience wrapper that plans the transform for a single call.
pub fn direct_solve(
    c_o: &FreqSymbol,
    plan: &CarrierPlan,
    params: &AdmmParams,
    ell: usize,
) -> Result<DirectOutput, EngineError> {
    let ofdm = Ofdm::new(plan.n(), ell)?;
    AdmmDirect::new(ofdm, plan.clone(), *params)?.solve(c_o)
}
