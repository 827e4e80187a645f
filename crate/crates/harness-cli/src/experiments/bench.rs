//! Per-iteration wall time of the direct engine against transform size.
//!
//! The time of a zero-iteration solve (setup plus final diagnostics) is subtracted
//! from a `bench_iters` solve, so the slope is the iteration cost alone. Each
//! figure is the minimum over `bench_reps` repetitions.

use std::hint::black_box;
use std::time::Instant;

use admm_direct::{AdmmDirect, AdmmParams};
use dsp_core::{papr, Constellation, FreqSymbol};
use rand::Rng;

use crate::config::{ExperimentConfig, Solver};
use crate::csv;
use crate::error::HarnessError;
use crate::pipeline::Setup;
use crate::seed::{stream_rng, Domain};

const FFT_PAIRS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub ell: usize,
    pub len: usize,
    pub seconds_per_iter: f64,
    pub setup_seconds: f64,
    /// One `ifft` plus one `fft` at the same size.
    pub fft_pair_seconds: f64,
}

/// Log-log fit of time against `ℓN·log₂(ℓN)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    /// `ln c` of the unit-slope model `t = c·ℓN·log₂(ℓN)`.
    pub log_c: f64,
    /// R² of the unit-slope model.
    pub r2: f64,
    /// Least-squares slope and its R², for reference.
    pub free_slope: f64,
    pub free_r2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub fit: Option<ScalingFit>,
}

/// Fits `(len, seconds)` pairs; needs at least two distinct sizes.
pub fn fit_scaling(points: &[(usize, f64)]) -> Option<ScalingFit> {
    if points.len() < 2 || points.iter().any(|&(l, t)| l < 2 || !(t > 0.0)) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|&(l, _)| (l as f64 * (l as f64).log2()).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if ss_tot == 0.0 || sxx == 0.0 {
        return None;
    }
    let log_c = my - mx;
    let ss_fixed: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - x - log_c).powi(2)).sum();
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>() / sxx;
    let ss_free: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - my - slope * (x - mx)).powi(2)).sum();
    Some(ScalingFit { log_c, r2: 1.0 - ss_fixed / ss_tot, free_slope: slope, free_r2: 1.0 - ss_free / ss_tot })
}

fn timed<T>(reps: usize, mut f: impl FnMut() -> Result<T, HarnessError>) -> Result<f64, HarnessError> {
    let mut best = f64::INFINITY;
    black_box(f()?);
    for _ in 0..reps {
        let t0 = Instant::now();
        black_box(f()?);
        best = best.min(t0.elapsed().as_secs_f64());
    }
    Ok(best)
}

/// First symbol above the PAPR target, so the engine is not bypassed.
fn peaky_symbol(setup: &Setup, alpha: f64) -> Result<FreqSymbol, HarnessError> {
    let q: &Constellation = &setup.constellation;
    for i in 0..10_000u64 {
        let mut rng = stream_rng(setup.seed, Domain::Bench, setup.plan.n() as u64, i);
        let bits: Vec<bool> = (0..setup.bits_per_ofdm_symbol()).map(|_| rng.gen()).collect();
        let c = q.map_bits(&bits, &setup.plan)?;
        if papr(&setup.ofdm.ifft(&c)?)? > alpha {
            return Ok(c);
        }
    }
    Err(HarnessError::Numerical("no symbol above the PAPR target for benchmarking".into()))
}

pub fn run_bench(cfg: &ExperimentConfig) -> Result<BenchReport, HarnessError> {
    let mut rows = Vec::new();
    for &n in &cfg.bench_sizes {
        let sized = ExperimentConfig { n_carriers: n, n_free: (12 * n / 64).max(1), ..cfg.clone() };
        sized.validate()?;
        let setup = Setup::new(&sized)?;
        let base = sized.admm_params(Solver::Direct, cfg.betas[0]);
        let c_o = peaky_symbol(&setup, base.alpha)?;
        let engine = |iters| AdmmDirect::new(setup.ofdm.clone(), setup.plan.clone(), AdmmParams { max_iters: iters, eps: 0.0, ..base });
        let (full, empty) = (engine(cfg.bench_iters)?, engine(0)?);
        let t_full = timed(cfg.bench_reps, || Ok(full.solve(&c_o)?))?;
        let t_empty = timed(cfg.bench_reps, || Ok(empty.solve(&c_o)?))?;
        let t_pair = timed(cfg.bench_reps, || {
            for _ in 0..FFT_PAIRS {
                let x = setup.ofdm.ifft(black_box(&c_o))?;
                black_box(setup.ofdm.fft(&x)?);
            }
            Ok(())
        })? / FFT_PAIRS as f64;
        rows.push(BenchRow {
            n,
            ell: cfg.ell,
            len: setup.ofdm.len(),
            seconds_per_iter: (t_full - t_empty).max(0.0) / cfg.bench_iters as f64,
            setup_seconds: t_empty,
            fft_pair_seconds: t_pair,
        });
    }
    let fit = fit_scaling(&rows.iter().map(|r| (r.len, r.seconds_per_iter)).collect::<Vec<_>>());
    Ok(BenchReport { rows, fit })
}

pub fn bench_csv(r: &BenchReport) -> String {
    csv::render(
        &["n", "ell", "len", "seconds_per_iter", "setup_seconds", "fft_pair_seconds", "iter_over_fft_pair"],
        r.rows.iter().map(|b| {
            vec![
                b.n.to_string(),
                b.ell.to_string(),
                b.len.to_string(),
                csv::sci(b.seconds_per_iter),
                csv::sci(b.setup_seconds),
                csv::sci(b.fft_pair_seconds),
                format!("{:.4}", b.seconds_per_iter / b.fft_pair_seconds),
            ]
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_n_log_n_fits_perfectly() {
        let pts: Vec<(usize, f64)> = [256usize, 1024, 4096].iter().map(|&l| (l, 3e-9 * l as f64 * (l as f64).log2())).collect();
        let f = fit_scaling(&pts).unwrap();
        assert!((f.r2 - 1.0).abs() < 1e-12 && (f.free_slope - 1.0).abs() < 1e-12);
        assert!((f.log_c - 3e-9f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn quadratic_growth_fits_poorly() {
        let pts: Vec<(usize, f64)> = [256usize, 1024, 4096].iter().map(|&l| (l, 1e-12 * (l * l) as f64)).collect();
        let f = fit_scaling(&pts).unwrap();
        assert!(f.r2 < 0.95, "{f:?}");
        assert!(f.free_r2 > 0.99);
        assert!(fit_scaling(&pts[..1]).is_none());
    }
}
