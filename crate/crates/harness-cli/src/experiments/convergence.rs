//! Residual curves per iteration, and the consensus gap `‖Ac* − x*‖²` against ρ̃.

use admm_direct::{AdmmDirect, AdmmParams};
use admm_relax::{feasible_start, AdmmRelax, RelaxStart};
use rayon::prelude::*;

use crate::config::{ExperimentConfig, Solver};
use crate::csv;
use crate::error::HarnessError;
use crate::pipeline::{curves, Curve, Setup};

/// Warm-start direct run used to build feasible starting points.
const WARM_START_ITERS: usize = 1000;
const WARM_START_EPS: f64 = 1e-14;
/// Relative PAPR slack accepted on a warm start.
const WARM_START_TOL: f64 = 1e-6;
/// Stopping threshold for the relaxed runs of the consensus sweep.
const CONSENSUS_EPS: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub curve: Curve,
    pub iteration: usize,
    /// Direct: `‖Δc‖² + ‖Δx‖²`. Relax: `‖Δu‖² + ‖Δw‖²`.
    pub residual_mean: f64,
    pub residual_median: f64,
    /// Mean `‖Ac − x‖²`.
    pub gap_mean: f64,
    pub symbols: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsensusRow {
    pub rho_tilde: f64,
    pub median_gap: f64,
    pub mean_gap: f64,
    /// Symbols with an accepted feasible start.
    pub feasible: usize,
    pub symbols: usize,
    /// Symbols whose gap exceeds `(‖S_D(c¹−c_o)‖² − ‖S_D(c*−c_o)‖²)/ρ̃` beyond round-off.
    pub bound_violations: usize,
    /// Largest `gap − bound` seen.
    pub max_excess: f64,
}

pub(crate) fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Per-symbol (residual, gap) traces. `None` for symbols that were passed through.
type Trace = Option<Vec<(f64, f64)>>;

pub fn run_convergence(cfg: &ExperimentConfig) -> Result<Vec<ConvergenceRow>, HarnessError> {
    let setup = Setup::new(cfg)?;
    let mut rows = Vec::new();
    for curve in curves(cfg).into_iter().filter(|c| c.solver.is_admm()) {
        let params = AdmmParams {
            max_iters: cfg.convergence_iters,
            eps: 0.0,
            ..cfg.admm_params(curve.solver, curve.beta.unwrap_or(0.0))
        };
        let direct = AdmmDirect::new(setup.ofdm.clone(), setup.plan.clone(), params)?;
        let relax = match curve.solver {
            Solver::Relax => Some(AdmmRelax::new(setup.ofdm.clone(), setup.plan.clone(), params)?),
            _ => None,
        };
        let traces = (0..cfg.n_symbols)
            .into_par_iter()
            .map(|i| -> Result<Trace, HarnessError> {
                let (_, c_o) = setup.symbol(i)?;
                let ctx = |e| HarnessError::numerical(format!("{} symbol {i}", curve.solver), e);
                Ok(match &relax {
                    Some(e) => {
                        let r = e.solve(&c_o).map_err(ctx)?.report;
                        (!r.bypassed).then(|| r.trace.iter().map(|t| (t.residual, t.consensus_gap)).collect())
                    }
                    None => {
                        let r = direct.solve(&c_o).map_err(ctx)?.report;
                        (!r.bypassed)
                            .then(|| r.trace.iter().map(|t| (t.change_residual, t.primal_residual.powi(2))).collect())
                    }
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let traces: Vec<_> = traces.into_iter().flatten().collect();
        for k in 0..cfg.convergence_iters {
            let mut res: Vec<f64> = traces.iter().filter_map(|t| t.get(k).map(|v| v.0)).collect();
            if res.is_empty() {
                break;
            }
            let gap_mean = traces.iter().filter_map(|t| t.get(k).map(|v| v.1)).sum::<f64>() / res.len() as f64;
            let residual_mean = res.iter().sum::<f64>() / res.len() as f64;
            rows.push(ConvergenceRow {
                curve,
                iteration: k + 1,
                residual_mean,
                residual_median: median(&mut res),
                gap_mean,
                symbols: res.len(),
            });
        }
    }
    Ok(rows)
}

/// Relaxed runs from feasible starts over `cfg.rho_tilde_grid` with ρ = 3ρ̃.
pub fn run_consensus(cfg: &ExperimentConfig) -> Result<Vec<ConsensusRow>, HarnessError> {
    let setup = Setup::new(cfg)?;
    let warm = AdmmParams {
        max_iters: WARM_START_ITERS,
        eps: WARM_START_EPS,
        ..cfg.admm_params(Solver::Direct, cfg.consensus_beta)
    };
    let starts = (0..cfg.n_symbols)
        .into_par_iter()
        .map(|i| {
            let (_, c_o) = setup.symbol(i)?;
            let fs = feasible_start(&setup.ofdm, &setup.plan, &warm, &c_o, WARM_START_TOL)
                .map_err(|e| HarnessError::numerical(format!("warm start symbol {i}"), e))?;
            Ok((c_o, fs))
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;

    let mut rows = Vec::new();
    for &rt in &cfg.rho_tilde_grid {
        let params = AdmmParams {
            rho: 3.0 * rt,
            rho_tilde: rt,
            max_iters: cfg.consensus_iters,
            eps: CONSENSUS_EPS,
            ..cfg.admm_params(Solver::Relax, cfg.consensus_beta)
        };
        let engine = AdmmRelax::new(setup.ofdm.clone(), setup.plan.clone(), params)?;
        let results = starts
            .par_iter()
            .filter(|(_, fs)| fs.feasible)
            .map(|(c_o, fs)| {
                let out = engine
                    .solve_from(c_o, &RelaxStart::Feasible(fs.c1.clone()))
                    .map_err(|e| HarnessError::numerical(format!("consensus run rho_tilde={rt}"), e))?;
                let d1 = setup.plan.data_dist_sqr(&fs.c1, c_o);
                let bound = (d1 - setup.plan.data_dist_sqr(&out.c, c_o)) / rt;
                let gap = out.report.consensus_gap;
                // comparisons carry round-off of order 1e-12 relative to the distortion
                Ok((gap, gap - bound, gap > bound + 1e-12 * (1.0 + d1)))
            })
            .collect::<Result<Vec<_>, HarnessError>>()?;
        let mut gaps: Vec<f64> = results.iter().map(|r| r.0).collect();
        let mean_gap = gaps.iter().sum::<f64>() / gaps.len().max(1) as f64;
        rows.push(ConsensusRow {
            rho_tilde: rt,
            median_gap: median(&mut gaps),
            mean_gap,
            feasible: results.len(),
            symbols: starts.len(),
            bound_violations: results.iter().filter(|r| r.2).count(),
            max_excess: results.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max),
        });
    }
    Ok(rows)
}

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    csv::render(
        &["solver", "beta", "iteration", "residual_mean", "residual_median", "gap_mean", "symbols"],
        rows.iter().map(|r| {
            vec![
                r.curve.solver.to_string(),
                r.curve.beta_field(),
                r.iteration.to_string(),
                csv::sci(r.residual_mean),
                csv::sci(r.residual_median),
                csv::sci(r.gap_mean),
                r.symbols.to_string(),
            ]
        }),
    )
}

pub fn consensus_csv(rows: &[ConsensusRow]) -> String {
    csv::render(
        &["rho_tilde", "median_gap", "mean_gap", "feasible", "symbols", "bound_violations", "max_excess"],
        rows.iter().map(|r| {
            vec![
                r.rho_tilde.to_string(),
                csv::sci(r.median_gap),
                csv::sci(r.mean_gap),
                r.feasible.to_string(),
                r.symbols.to_string(),
                r.bound_violations.to_string(),
                csv::sci(r.max_excess),
            ]
        }),
    )
}
