//! Transmit spectra after the SSPA.
//!
//! Periodograms are taken over whole symbols (rectangular window, one segment per
//! symbol), so an unprocessed symbol through a linear amplifier has no energy
//! outside its N carriers and everything seen there comes from the processing or
//! the amplifier, not from leakage across symbol boundaries.

use channel_metrics::{welch, Window};
use dsp_core::Complex64;

use crate::config::{ExperimentConfig, Solver};
use crate::csv;
use crate::error::HarnessError;
use crate::experiments::ber::amplify;
use crate::pipeline::{curves, run_curve, Curve, Setup};

#[derive(Debug, Clone, PartialEq)]
pub struct PsdCurve {
    /// Solver name, or `ideal` for the unprocessed signal without the SSPA.
    pub label: String,
    pub beta: Option<f64>,
    /// `(normalized frequency, dB relative to the peak)`, centred.
    pub spectrum: Vec<(f64, f64)>,
    /// Mean level of bins outside the N occupied carriers relative to the data carriers.
    pub out_of_band_db: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsdReport {
    pub curves: Vec<PsdCurve>,
}

pub fn run_psd(cfg: &ExperimentConfig) -> Result<PsdReport, HarnessError> {
    let setup = Setup::new(cfg)?;
    let len = setup.ofdm.len();
    let out_band: Vec<usize> = (setup.ofdm.n()..len).collect();
    let mut list = vec![(Curve { solver: Solver::Original, beta: None }, true)];
    list.extend(curves(cfg).into_iter().map(|c| (c, false)));

    let mut out = Vec::new();
    for (curve, linear) in list {
        let run = run_curve(&setup, cfg, curve)?;
        let stream: Vec<Complex64> = amplify(cfg, &run, linear)?.iter().flat_map(|x| x.iter().copied()).collect();
        let psd = welch(&stream, len, Window::Rectangular, len)?;
        out.push(PsdCurve {
            label: if linear { "ideal".into() } else { curve.solver.to_string() },
            beta: curve.beta,
            spectrum: psd.centered_db(),
            out_of_band_db: if out_band.is_empty() { f64::NEG_INFINITY } else { psd.band_ratio_db(setup.plan.data(), &out_band) },
        });
    }
    Ok(PsdReport { curves: out })
}

fn beta(b: Option<f64>) -> String {
    b.map(|v| v.to_string()).unwrap_or_default()
}

pub fn psd_csv(r: &PsdReport) -> String {
    csv::render(
        &["solver", "beta", "freq", "psd_db"],
        r.curves.iter().flat_map(|c| {
            c.spectrum.iter().map(move |&(f, p)| vec![c.label.clone(), beta(c.beta), format!("{f:.6}"), csv::db(p)])
        }),
    )
}

pub fn psd_summary_csv(r: &PsdReport) -> String {
    csv::render(
        &["solver", "beta", "out_of_band_db"],
        r.curves.iter().map(|c| vec![c.label.clone(), beta(c.beta), csv::db(c.out_of_band_db)]),
    )
}
