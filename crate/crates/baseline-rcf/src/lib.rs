//! Repeated clipping and filtering.
//!
//! Each pass clips the time signal to `√(target · mean power)` keeping the
//! phase, returns to the carrier domain, and zeroes the free carriers. The
//! out-of-band bins vanish automatically because only the first N DFT bins are
//! kept. The output is the time signal of the final filtered carriers.

use dsp_core::{cvec, db_to_linear, CarrierPlan, Complex64, DspError, FreqSymbol, Ofdm, TimeSymbol};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RcfError {
    #[error("invalid RCF parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Dsp(#[from] DspError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RcfParams {
    pub target_papr_db: f64,
    pub iterations: usize,
}

impl Default for RcfParams {
    fn default() -> Self {
        Self { target_papr_db: 4.0, iterations: 10 }
    }
}

impl RcfParams {
    pub fn validate(&self) -> Result<(), RcfError> {
        if self.iterations == 0 {
            return Err(RcfError::InvalidParams("iterations must be at least 1".into()));
        }
        if !(self.target_papr_db > 0.0) {
            return Err(RcfError::InvalidParams(format!("target must exceed 0 dB, got {}", self.target_papr_db)));
        }
        Ok(())
    }
}

/// Clips every sample to amplitude `a_clip`, keeping its phase.
pub fn clip(x: &[Complex64], a_clip: f64) -> Vec<Complex64> {
    x.iter()
        .map(|&v| {
            let m = v.norm();
            if m > a_clip {
                v * (a_clip / m)
            } else {
                v
            }
        })
        .collect()
}

/// Result of one run, with the carriers kept for EVM accounting.
#[derive(Debug, Clone, PartialEq)]
pub struct RcfOutput {
    pub x: TimeSymbol,
    pub c: FreqSymbol,
}

pub fn rcf(c_o: &FreqSymbol, plan: &CarrierPlan, params: &RcfParams, ofdm: &Ofdm) -> Result<RcfOutput, RcfError> {
    params.validate()?;
    if c_o.len() != plan.n() || ofdm.n() != plan.n() {
        return Err(DspError::LengthMismatch { expected: plan.n(), got: c_o.len() }.into());
    }
    let target = db_to_linear(params.target_papr_db);
    let mut c = c_o.clone();
    let mut x = ofdm.ifft(&c)?;
    for _ in 0..params.iterations {
        let a_clip = (target * x.mean_power()).sqrt();
        let clipped = clip(&x, a_clip);
        let mut f = ofdm.fft(&clipped)?;
        for &i in plan.free() {
            f.as_mut_slice()[i] = Complex64::new(0.0, 0.0);
        }
        c = f;
        x = ofdm.ifft(&c)?;
    }
    Ok(RcfOutput { x, c })
}

/// In-band energy `‖c‖²` of a time signal's carriers.
pub fn in_band_energy(x: &[Complex64], ofdm: &Ofdm) -> Result<f64, RcfError> {
    Ok(cvec::norm_sqr(&ofdm.fft(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_is_idempotent_and_phase_preserving() {
        let x = vec![Complex64::new(3.0, 4.0), Complex64::new(0.1, 0.0), Complex64::new(0.0, -2.0)];
        let once = clip(&x, 1.0);
        assert_eq!(clip(&once, 1.0), once);
        assert!((once[0] - Complex64::new(0.6, 0.8)).norm() < 1e-15);
        assert_eq!(once[1], x[1]);
    }

    #[test]
    fn params_validated() {
        assert!(RcfParams { iterations: 0, ..Default::default() }.validate().is_err());
        assert!(RcfParams { target_papr_db: 0.0, ..Default::default() }.validate().is_err());
    }
}
