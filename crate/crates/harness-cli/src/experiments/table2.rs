//! EVM table and PAPR CCDF curves.

use channel_metrics::MetricAccumulator;
use dsp_core::CarrierPlan;

use crate::config::{ExperimentConfig, Solver};
use crate::csv;
use crate::error::HarnessError;
use crate::pipeline::{curves, run_curve, Curve, CurveRun, Setup};

#[derive(Debug, Clone, PartialEq)]
pub struct Table2Row {
    pub curve: Curve,
    pub evm_db: f64,
    pub mean_papr_db: f64,
    /// Symbols that were actually modified.
    pub processed: usize,
    pub symbols: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CcdfRow {
    pub curve: Curve,
    pub threshold_db: f64,
    pub prob: f64,
}

pub fn table2_row(run: &CurveRun, plan: &CarrierPlan) -> Result<Table2Row, HarnessError> {
    let mut acc = MetricAccumulator::new();
    for s in &run.symbols {
        acc.push_evm(&s.out.c, &s.c_o, plan)?;
        acc.push_papr_db(s.papr_db);
    }
    let n = run.symbols.len();
    Ok(Table2Row {
        curve: run.curve,
        evm_db: acc.evm_db()?,
        mean_papr_db: acc.papr_db.iter().sum::<f64>() / n as f64,
        processed: run.symbols.iter().filter(|s| !s.out.bypassed).count(),
        symbols: n,
    })
}

/// 2 dB to 12 dB in 0.05 dB steps.
pub fn default_thresholds() -> Vec<f64> {
    (0..=200).map(|i| 2.0 + 0.05 * i as f64).collect()
}

pub fn ccdf_rows(run: &CurveRun, thresholds: &[f64]) -> Result<Vec<CcdfRow>, HarnessError> {
    let samples: Vec<f64> = run.symbols.iter().map(|s| s.papr_db).collect();
    let probs = channel_metrics::ccdf(&samples, thresholds)?;
    Ok(thresholds
        .iter()
        .zip(probs)
        .map(|(&threshold_db, prob)| CcdfRow { curve: run.curve, threshold_db, prob })
        .collect())
}

pub fn run_table2(cfg: &ExperimentConfig) -> Result<Vec<Table2Row>, HarnessError> {
    let setup = Setup::new(cfg)?;
    curves(cfg)
        .into_iter()
        .map(|curve| table2_row(&run_curve(&setup, cfg, curve)?, &setup.plan))
        .collect()
}

/// CCDF per configured curve. The unprocessed curve is always included, first.
pub fn run_ccdf(cfg: &ExperimentConfig) -> Result<Vec<CcdfRow>, HarnessError> {
    let setup = Setup::new(cfg)?;
    let mut list = curves(cfg);
    if !cfg.solvers.contains(&Solver::Original) {
        list.insert(0, Curve { solver: Solver::Original, beta: None });
    }
    let thresholds = default_thresholds();
    let mut rows = Vec::new();
    for curve in list {
        rows.extend(ccdf_rows(&run_curve(&setup, cfg, curve)?, &thresholds)?);
    }
    Ok(rows)
}

pub fn table2_csv(rows: &[Table2Row]) -> String {
    csv::render(
        &["solver", "beta", "evm_db", "mean_papr_db", "processed", "symbols"],
        rows.iter().map(|r| {
            vec![
                r.curve.solver.to_string(),
                r.curve.beta_field(),
                csv::db(r.evm_db),
                csv::db(r.mean_papr_db),
                r.processed.to_string(),
                r.symbols.to_string(),
            ]
        }),
    )
}

pub fn ccdf_csv(rows: &[CcdfRow]) -> String {
    csv::render(
        &["solver", "beta", "threshold_db", "prob"],
        rows.iter().map(|r| vec![r.curve.solver.to_string(), r.curve.beta_field(), csv::db(r.threshold_db), csv::sci(r.prob)]),
    )
}
