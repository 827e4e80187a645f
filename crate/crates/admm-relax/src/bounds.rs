use dsp_core::cvec;

use crate::engine::{RelaxReport, RelaxState};

/// Smallest eigenvalue of the descent matrix, `min(ρ/2, (ρ² + 2ρρ̃ − 8ρ̃²)/(2ρ))`.
pub fn lambda_min_q(rho: f64, rho_tilde: f64) -> f64 {
    (0.5 * rho).min((rho * rho + 2.0 * rho * rho_tilde - 8.0 * rho_tilde * rho_tilde) / (2.0 * rho))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescentCheck {
    /// `L(k) − L(k+1)`
    pub lhs: f64,
    /// `λ_min(Q)(‖Δu‖² + ‖Δw‖²)`
    pub rhs: f64,
    pub ok: bool,
}

/// Compares the Lagrangian drop between consecutive states with the quadratic margin.
pub fn descent_check(l_k: f64, l_k1: f64, prev: &RelaxState, next: &RelaxState, rho: f64, rho_tilde: f64) -> DescentCheck {
    let lhs = l_k - l_k1;
    let rhs = lambda_min_q(rho, rho_tilde) * (cvec::dist_sqr(&next.u, &prev.u) + cvec::dist_sqr(&next.w, &prev.w));
    DescentCheck { lhs, rhs, ok: lhs >= rhs - 1e-8 * (1.0 + lhs.abs()) }
}

/// `max(‖y1 − ρ̃(u − w)‖∞, ‖y2 + ρ̃(u − w)‖∞)`
pub fn multiplier_identity_residual(s: &RelaxState, rho_tilde: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..s.u.len() {
        let d = (s.u[i] - s.w[i]) * rho_tilde;
        worst = worst.max((s.y1[i] - d).norm()).max((s.y2[i] + d).norm());
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationBound {
    /// `(L(1) − L*)/(Cε)`
    pub bound: f64,
    /// First 1-based iteration whose residual is at most ε.
    pub actual_r: Option<usize>,
    /// `actual_r ≤ bound`
    pub pass: bool,
    /// `actual_r − 1 ≤ bound`. Summing the descent inequality over the iterations
    /// before first passage only controls those `r − 1` terms.
    pub pass_shifted: bool,
}

/// Iteration-count bound with `C = λ_min(Q)` and
/// `L* = ½‖S_D(c* − c_o)‖² + (ρ̃/2)‖u* − w*‖²` taken at the last iterate.
pub fn theorem3_bound(report: &RelaxReport, eps: f64, rho: f64, rho_tilde: f64) -> IterationBound {
    let c = lambda_min_q(rho, rho_tilde);
    let bound = (report.initial_lagrangian - report.final_objective) / (c * eps);
    let actual_r = report.trace.iter().position(|t| t.residual <= eps).map(|i| i + 1);
    let pass = matches!(actual_r, Some(r) if r as f64 <= bound);
    let pass_shifted = matches!(actual_r, Some(r) if (r - 1) as f64 <= bound);
    IterationBound { bound, actual_r, pass, pass_shifted }
}
