use admm_direct::{validate_original, AdmmParams, EngineError};
use dsp_core::{cvec, papr, CarrierPlan, Complex64, FreqSymbol, Ofdm, TimeSymbol};
use subproblems::{c_update, uw_update, x_update, SubproblemError};

use crate::bounds::{descent_check, multiplier_identity_residual};

#[derive(Debug, Clone, PartialEq)]
pub struct RelaxState {
    pub c: FreqSymbol,
    /// `A c`, cached.
    pub ac: TimeSymbol,
    pub x: TimeSymbol,
    pub u: TimeSymbol,
    pub w: TimeSymbol,
    pub y1: TimeSymbol,
    pub y2: TimeSymbol,
    pub k: usize,
}

/// How the multipliers are seeded at the standard start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MultiplierInit {
    /// `y1 = ρ̃(u − w)`, `y2 = −y1`, the relation every later iterate satisfies.
    #[default]
    Consistent,
    /// `y1 = y2 = 0`.
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RelaxStart {
    /// `c = c_o`, `x = P(Ac_o)`, `u = Ac_o`, `w = x`.
    Standard(MultiplierInit),
    /// `c = c1` and `x = u = w = Ac1`, with zero multipliers.
    Feasible(FreqSymbol),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxIterate {
    pub k: usize,
    /// ‖Δu‖² + ‖Δw‖²
    pub residual: f64,
    pub lagrangian: f64,
    pub descent_lhs: f64,
    pub descent_rhs: f64,
    pub descent_ok: bool,
    pub multiplier_residual: f64,
    /// ‖Ac − x‖²
    pub consensus_gap: f64,
    pub mu: f64,
    pub gamma: f64,
    pub papr: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelaxReport {
    pub trace: Vec<RelaxIterate>,
    pub initial_lagrangian: f64,
    /// `½‖S_D(c − c_o)‖² + (ρ̃/2)‖u − w‖²` at the last iterate.
    pub final_objective: f64,
    pub consensus_gap: f64,
    pub converged: bool,
    pub bypassed: bool,
    pub warnings: Vec<String>,
    pub initial_state: RelaxState,
    pub final_state: RelaxState,
}

impl RelaxReport {
    pub fn all_descent_ok(&self) -> bool {
        self.trace.iter().all(|t| t.descent_ok)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelaxOutput {
    pub x: TimeSymbol,
    pub c: FreqSymbol,
    pub report: RelaxReport,
}

#[derive(Debug, Clone)]
pub struct AdmmRelax {
    ofdm: Ofdm,
    plan: CarrierPlan,
    params: AdmmParams,
    init: MultiplierInit,
}

fn at(k: usize) -> impl FnOnce(SubproblemError) -> EngineError {
    move |source| EngineError::Subproblem { iteration: k, source }
}

impl AdmmRelax {
    pub fn new(ofdm: Ofdm, plan: CarrierPlan, params: AdmmParams) -> Result<Self, EngineError> {
        params.validate()?;
        if !(params.rho_tilde > 0.0 && params.rho > 2.0 * params.rho_tilde) {
            return Err(EngineError::InvalidParams(format!(
                "need rho > 2*rho_tilde > 0, got rho = {}, rho_tilde = {}",
                params.rho, params.rho_tilde
            )));
        }
        if ofdm.n() != plan.n() {
            return Err(EngineError::InvalidParams(format!("transform has {} carriers, plan has {}", ofdm.n(), plan.n())));
        }
        Ok(Self { ofdm, plan, params, init: MultiplierInit::default() })
    }

    pub fn with_multiplier_init(mut self, init: MultiplierInit) -> Self {
        self.init = init;
        self
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

    pub fn lagrangian(&self, c_o: &[Complex64], s: &RelaxState) -> f64 {
        let (rho, rt) = (self.params.rho, self.params.rho_tilde);
        let a = cvec::sub(&s.ac, &s.u);
        let e = cvec::sub(&s.x, &s.w);
        0.5 * self.plan.data_dist_sqr(&s.c, c_o)
            + cvec::dot(&s.y1, &a).re
            + cvec::dot(&s.y2, &e).re
            + 0.5 * rt * cvec::dist_sqr(&s.u, &s.w)
            + 0.5 * rho * (cvec::norm_sqr(&a) + cvec::norm_sqr(&e))
    }

    /// `½‖S_D(c − c_o)‖² + (ρ̃/2)‖u − w‖²`
    pub fn relaxed_objective(&self, c_o: &[Complex64], s: &RelaxState) -> f64 {
        0.5 * self.plan.data_dist_sqr(&s.c, c_o) + 0.5 * self.params.rho_tilde * cvec::dist_sqr(&s.u, &s.w)
    }

    pub fn initial_state(&self, c_o: &FreqSymbol, start: &RelaxStart) -> Result<RelaxState, EngineError> {
        let len = self.ofdm.len();
        match start {
            RelaxStart::Standard(init) => {
                let ac = self.ofdm.ifft(c_o)?;
                let x = x_update(&ac, self.params.alpha, &self.params.bisection).map_err(at(0))?.x_next;
                let (y1, y2) = match init {
                    MultiplierInit::Zero => (TimeSymbol::zeros(len), TimeSymbol::zeros(len)),
                    MultiplierInit::Consistent => {
                        let d = cvec::scale(&cvec::sub(&ac, &x), self.params.rho_tilde);
                        let neg = cvec::scale(&d, -1.0);
                        (TimeSymbol::new(d)?, TimeSymbol::new(neg)?)
                    }
                };
                Ok(RelaxState { c: c_o.clone(), u: ac.clone(), w: x.clone(), ac, x, y1, y2, k: 1 })
            }
            RelaxStart::Feasible(c1) => {
                if c1.len() != self.plan.n() {
                    return Err(dsp_core::DspError::LengthMismatch { expected: self.plan.n(), got: c1.len() }.into());
                }
                let ac = self.ofdm.ifft(c1)?;
                Ok(RelaxState {
                    c: c1.clone(),
                    x: ac.clone(),
                    u: ac.clone(),
                    w: ac.clone(),
                    ac,
                    y1: TimeSymbol::zeros(len),
                    y2: TimeSymbol::zeros(len),
                    k: 1,
                })
            }
        }
    }

    /// One pass of the c-, x-, (u,w)- and multiplier updates.
    pub fn step(&self, c_o: &FreqSymbol, s: &RelaxState) -> Result<(RelaxState, f64, f64, Option<String>), EngineError> {
        let p = &self.params;
        let r = p.rho / self.ofdm.len() as f64;
        let f = self.ofdm.fft(&cvec::axpy(&s.u, -1.0 / p.rho, &s.y1))?;
        let v = cvec::axpy(c_o, r, &f);
        let cu = c_update(&v, &self.plan, p.beta, r).map_err(at(s.k))?;
        let ac = self.ofdm.ifft(&cu.c_next)?;
        let b = cvec::axpy(&s.w, -1.0 / p.rho, &s.y2);
        let (x, gamma, warning) = match x_update(&b, p.alpha, &p.bisection) {
            Ok(xu) => (xu.x_next, xu.gamma_star, None),
            Err(SubproblemError::ZeroInput) => (
                TimeSymbol::zeros(b.len()),
                f64::NAN,
                Some(format!("iteration {}: x-update input was zero, x set to 0", s.k)),
            ),
            Err(e) => return Err(at(s.k)(e)),
        };
        let (u, w) = uw_update(&x, &ac, &s.y1, &s.y2, p.rho, p.rho_tilde).map_err(at(s.k))?;
        let y1 = TimeSymbol::new(cvec::axpy(&s.y1, p.rho, &cvec::sub(&ac, &u)))?;
        let y2 = TimeSymbol::new(cvec::axpy(&s.y2, p.rho, &cvec::sub(&x, &w)))?;
        Ok((RelaxState { c: cu.c_next, ac, x, u, w, y1, y2, k: s.k + 1 }, cu.mu_star, gamma, warning))
    }

    /// Symbols already within the PAPR target pass through unchanged.
    pub fn solve(&self, c_o: &FreqSymbol) -> Result<RelaxOutput, EngineError> {
        validate_original(&self.plan, c_o)?;
        let ac_o = self.ofdm.ifft(c_o)?;
        if papr(&ac_o)? <= self.params.alpha {
            let len = ac_o.len();
            let state = RelaxState {
                c: c_o.clone(),
                ac: ac_o.clone(),
                x: ac_o.clone(),
                u: ac_o.clone(),
                w: ac_o.clone(),
                y1: TimeSymbol::zeros(len),
                y2: TimeSymbol::zeros(len),
                k: 1,
            };
            let report = RelaxReport {
                trace: Vec::new(),
                initial_lagrangian: 0.0,
                final_objective: 0.0,
                consensus_gap: 0.0,
                converged: true,
                bypassed: true,
                warnings: Vec::new(),
                initial_state: state.clone(),
                final_state: state,
            };
            return Ok(RelaxOutput { x: ac_o, c: c_o.clone(), report });
        }
        self.solve_from(c_o, &RelaxStart::Standard(self.init))
    }

    /// Runs from an explicit start without the bypass rule.
    pub fn solve_from(&self, c_o: &FreqSymbol, start: &RelaxStart) -> Result<RelaxOutput, EngineError> {
        validate_original(&self.plan, c_o)?;
        let p = &self.params;
        let mut state = self.initial_state(c_o, start)?;
        let initial_state = state.clone();
        let mut l_prev = self.lagrangian(c_o, &state);
        let initial_lagrangian = l_prev;
        let mut trace = Vec::with_capacity(p.max_iters);
        let mut warnings = Vec::new();
        let mut converged = false;
        for _ in 0..p.max_iters {
            let (next, mu, gamma, warning) = self.step(c_o, &state)?;
            warnings.extend(warning);
            let l_next = self.lagrangian(c_o, &next);
            let dc = descent_check(l_prev, l_next, &state, &next, p.rho, p.rho_tilde);
            let residual = cvec::dist_sqr(&next.u, &state.u) + cvec::dist_sqr(&next.w, &state.w);
            trace.push(RelaxIterate {
                k: state.k,
                residual,
                lagrangian: l_next,
                descent_lhs: dc.lhs,
                descent_rhs: dc.rhs,
                descent_ok: dc.ok,
                multiplier_residual: multiplier_identity_residual(&next, p.rho_tilde),
                consensus_gap: cvec::dist_sqr(&next.ac, &next.x),
                mu,
                gamma,
                papr: papr(&next.x).unwrap_or(0.0),
            });
            state = next;
            l_prev = l_next;
            if residual < p.eps {
                converged = true;
                break;
            }
        }
        let report = RelaxReport {
            trace,
            initial_lagrangian,
            final_objective: self.relaxed_objective(c_o, &state),
            consensus_gap: cvec::dist_sqr(&state.ac, &state.x),
            converged,
            bypassed: false,
            warnings,
            initial_state,
            final_state: state.clone(),
        };
        Ok(RelaxOutput { x: state.x, c: state.c, report })
    }
}

/// Convenience wrapper that plans the transform for a single call.
pub fn relax_solve(c_o: &FreqSymbol, plan: &CarrierPlan, params: &AdmmParams, ell: usize) -> Result<RelaxOutput, EngineError> {
    let ofdm = Ofdm::new(plan.n(), ell)?;
    AdmmRelax::new(ofdm, plan.clone(), *params)?.solve(c_o)
}
