//! Symbol generation and the per-curve transmitter.

use admm_direct::AdmmDirect;
use admm_relax::AdmmRelax;
use baseline_rcf::{rcf, RcfParams};
use dsp_core::{papr_db, CarrierPlan, Constellation, FreqSymbol, Ofdm, TimeSymbol};
use rand::Rng;
use rayon::prelude::*;

use crate::config::{ExperimentConfig, Solver};
use crate::error::HarnessError;
use crate::seed::{stream_rng, Domain};

/// One transmitter configuration: a solver, plus β for the ADMM engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curve {
    pub solver: Solver,
    pub beta: Option<f64>,
}

impl Curve {
    pub fn beta_field(&self) -> String {
        self.beta.map(|b| b.to_string()).unwrap_or_default()
    }
}

/// Every configured curve in solver order, expanding ADMM solvers over β.
pub fn curves(cfg: &ExperimentConfig) -> Vec<Curve> {
    let mut out = Vec::new();
    for &solver in &cfg.solvers {
        if solver.is_admm() {
            out.extend(cfg.betas.iter().map(|&b| Curve { solver, beta: Some(b) }));
        } else {
            out.push(Curve { solver, beta: None });
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Setup {
    pub ofdm: Ofdm,
    pub plan: CarrierPlan,
    pub constellation: Constellation,
    pub seed: u64,
}

impl Setup {
    pub fn new(cfg: &ExperimentConfig) -> Result<Self, HarnessError> {
        Ok(Self {
            ofdm: Ofdm::new(cfg.n_carriers, cfg.ell)?,
            plan: CarrierPlan::guard_band(cfg.n_carriers, cfg.n_free)?,
            constellation: Constellation::new(cfg.constellation),
            seed: cfg.seed,
        })
    }

    pub fn bits_per_ofdm_symbol(&self) -> usize {
        self.plan.m() * self.constellation.bits_per_symbol()
    }

    /// Payload bits and carrier vector for symbol `i`.
    pub fn symbol(&self, i: usize) -> Result<(Vec<bool>, FreqSymbol), HarnessError> {
        let mut rng = stream_rng(self.seed, Domain::Symbols, 0, i as u64);
        let bits: Vec<bool> = (0..self.bits_per_ofdm_symbol()).map(|_| rng.gen()).collect();
        let c = self.constellation.map_bits(&bits, &self.plan)?;
        Ok((bits, c))
    }
}

#[derive(Debug, Clone)]
pub struct Processed {
    /// Transmit samples.
    pub x: TimeSymbol,
    /// Carriers used for EVM accounting.
    pub c: FreqSymbol,
    /// Whether the input already met the target and was passed through.
    pub bypassed: bool,
}

pub enum Transmitter {
    Original,
    Rcf(RcfParams),
    Direct(AdmmDirect),
    Relax(AdmmRelax),
}

impl Transmitter {
    pub fn new(setup: &Setup, cfg: &ExperimentConfig, curve: Curve) -> Result<Self, HarnessError> {
        let beta = curve.beta.unwrap_or(0.0);
        Ok(match curve.solver {
            Solver::Original => Transmitter::Original,
            Solver::Rcf => {
                let p = RcfParams { target_papr_db: cfg.rcf_target_db(), iterations: cfg.rcf_iters };
                p.validate()?;
                Transmitter::Rcf(p)
            }
            Solver::Direct => Transmitter::Direct(AdmmDirect::new(
                setup.ofdm.clone(),
                setup.plan.clone(),
                cfg.admm_params(Solver::Direct, beta),
            )?),
            Solver::Relax => Transmitter::Relax(AdmmRelax::new(
                setup.ofdm.clone(),
                setup.plan.clone(),
                cfg.admm_params(Solver::Relax, beta),
            )?),
        })
    }

    pub fn process(&self, setup: &Setup, c_o: &FreqSymbol) -> Result<Processed, HarnessError> {
        Ok(match self {
            Transmitter::Original => Processed { x: setup.ofdm.ifft(c_o)?, c: c_o.clone(), bypassed: true },
            Transmitter::Rcf(p) => {
                let out = rcf(c_o, &setup.plan, p, &setup.ofdm)?;
                let bypassed = &out.c == c_o;
                Processed { x: out.x, c: out.c, bypassed }
            }
            Transmitter::Direct(e) => {
                let out = e.solve(c_o)?;
                Processed { x: out.x, c: out.c, bypassed: out.report.bypassed }
            }
            Transmitter::Relax(e) => {
                let out = e.solve(c_o)?;
                Processed { x: out.x, c: out.c, bypassed: out.report.bypassed }
            }
        })
    }
}

/// Per-symbol results of one curve, in symbol order.
#[derive(Debug, Clone)]
pub struct CurveRun {
    pub curve: Curve,
    pub symbols: Vec<SymbolResult>,
}

#[derive(Debug, Clone)]
pub struct SymbolResult {
    pub bits: Vec<bool>,
    pub c_o: FreqSymbol,
    pub out: Processed,
    pub papr_db: f64,
}

/// Processes `cfg.n_symbols` symbols through one curve, in parallel, keeping order.
pub fn run_curve(setup: &Setup, cfg: &ExperimentConfig, curve: Curve) -> Result<CurveRun, HarnessError> {
    let tx = Transmitter::new(setup, cfg, curve)?;
    let symbols = (0..cfg.n_symbols)
        .into_par_iter()
        .map(|i| {
            let (bits, c_o) = setup.symbol(i)?;
            let out = tx
                .process(setup, &c_o)
                .map_err(|e| HarnessError::numerical(format!("{} symbol {i}", curve.solver), e))?;
            let p = papr_db(&out.x)?;
            if !p.is_finite() {
                return Err(HarnessError::Numerical(format!("{} symbol {i}: non-finite PAPR", curve.solver)));
            }
            Ok(SymbolResult { bits, c_o, out, papr_db: p })
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    Ok(CurveRun { curve, symbols })
}
