//! Bit error rate after the SSPA, over AWGN or multipath with zero-forcing.
//!
//! `E_b` is computed per curve from the mean energy of the transmitted carriers, free
//! carriers included, so power spent on reserved tones is charged to the solver.
//! Noise draws are shared between curves. The SSPA is calibrated per curve on the
//! mean power of that curve's batch.

use channel_metrics::{awgn, energy_per_bit, zf_equalize, MetricAccumulator, Multipath, Sspa, SspaParams};
use dsp_core::{Complex64, TimeSymbol};
use rayon::prelude::*;

use crate::config::{ChannelKind, ExperimentConfig, Solver};
use crate::csv;
use crate::error::HarnessError;
use crate::pipeline::{curves, run_curve, Curve, CurveRun, Setup};
use crate::seed::{stream_rng, Domain};

#[derive(Debug, Clone, PartialEq)]
pub struct BerRow {
    pub channel: ChannelKind,
    /// Solver name, or `ideal` for the unprocessed signal through a linear amplifier.
    pub label: String,
    pub beta: Option<f64>,
    pub ebn0_db: f64,
    pub ber: f64,
    pub bit_errors: u64,
    pub bits: u64,
}

/// Amplified transmit symbols of one curve; `linear` skips the SSPA.
pub(crate) fn amplify(cfg: &ExperimentConfig, run: &CurveRun, linear: bool) -> Result<Vec<TimeSymbol>, HarnessError> {
    let xs: Vec<&TimeSymbol> = run.symbols.iter().map(|s| &s.out.x).collect();
    if linear {
        return Ok(xs.into_iter().cloned().collect());
    }
    let mean_power = xs.iter().map(|x| x.mean_power()).sum::<f64>() / xs.len() as f64;
    let sspa = Sspa::calibrated(&SspaParams { smoothing_p: cfg.sspa_p, input_backoff_db: cfg.ibo_db }, mean_power)?;
    Ok(xs.par_iter().map(|x| sspa.apply(x)).collect())
}

fn count_curve(
    cfg: &ExperimentConfig,
    setup: &Setup,
    run: &CurveRun,
    linear: bool,
    label: String,
) -> Result<Vec<BerRow>, HarnessError> {
    let mean_energy = run.symbols.iter().map(|s| s.out.c.energy()).sum::<f64>() / run.symbols.len() as f64;
    let eb = energy_per_bit(mean_energy, setup.plan.m(), setup.constellation.bits_per_symbol());
    let amplified = amplify(cfg, run, linear)?;
    let mut rows = Vec::new();
    for (ci, &channel) in cfg.channels.iter().enumerate() {
        let (received, response): (Vec<TimeSymbol>, Option<Vec<Complex64>>) = match channel {
            ChannelKind::Awgn => (amplified.clone(), None),
            ChannelKind::Multipath => {
                let ch = Multipath::new(&cfg.multipath_profile(), cfg.cp_len)?;
                (ch.apply(&amplified), Some(ch.frequency_response(setup.ofdm.n(), setup.ofdm.len())))
            }
        };
        for (pi, &ebn0_db) in cfg.ebn0_db.iter().enumerate() {
            let key = ((ci as u64) << 32) | pi as u64;
            let per_symbol = received
                .par_iter()
                .zip(&run.symbols)
                .enumerate()
                .map(|(i, (y, s))| {
                    let mut rng = stream_rng(cfg.seed, Domain::Noise, key, i as u64);
                    let noisy = awgn(y, ebn0_db, eb, &mut rng)?;
                    let mut c = setup.ofdm.fft(&noisy)?.into_inner();
                    if let Some(h) = &response {
                        c = zf_equalize(&c, h)?;
                    }
                    let rx = setup.constellation.demap_bits(&c, &setup.plan)?;
                    let mut acc = MetricAccumulator::new();
                    acc.push_bits(&s.bits, &rx)?;
                    Ok(acc)
                })
                .collect::<Result<Vec<_>, HarnessError>>()?;
            let mut total = MetricAccumulator::new();
            for a in per_symbol {
                total = total.merge(a)?;
            }
            rows.push(BerRow {
                channel,
                label: label.clone(),
                beta: run.curve.beta,
                ebn0_db,
                ber: total.ber()?,
                bit_errors: total.bit_errors,
                bits: total.bits_total,
            });
        }
    }
    Ok(rows)
}

/// `ideal` first, then every configured curve through the SSPA.
pub fn run_ber(cfg: &ExperimentConfig) -> Result<Vec<BerRow>, HarnessError> {
    let setup = Setup::new(cfg)?;
    let original = run_curve(&setup, cfg, Curve { solver: Solver::Original, beta: None })?;
    let mut rows = count_curve(cfg, &setup, &original, true, "ideal".into())?;
    for curve in curves(cfg) {
        let run = if curve.solver == Solver::Original { original.clone() } else { run_curve(&setup, cfg, curve)? };
        rows.extend(count_curve(cfg, &setup, &run, false, curve.solver.to_string())?);
    }
    Ok(rows)
}

pub fn ber_csv(rows: &[BerRow]) -> String {
    csv::render(
        &["channel", "solver", "beta", "ebn0_db", "ber", "bit_errors", "bits"],
        rows.iter().map(|r| {
            vec![
                r.channel.to_string(),
                r.label.clone(),
                r.beta.map(|b| b.to_string()).unwrap_or_default(),
                csv::db(r.ebn0_db),
                csv::sci(r.ber),
                r.bit_errors.to_string(),
                r.bits.to_string(),
            ]
        }),
    )
}
