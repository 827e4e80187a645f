//! Rapp solid-state amplifier: `g(A) = A / (1 + (A/a_sat)^{2p})^{1/(2p)}`, phase untouched.

use dsp_core::{db_to_linear, Complex64, TimeSymbol};

use crate::error::ChannelError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SspaParams {
    pub smoothing_p: f64,
    /// `a_sat² / mean input power`, in dB.
    pub input_backoff_db: f64,
}

impl Default for SspaParams {
    fn default() -> Self {
        Self { smoothing_p: 3.0, input_backoff_db: 4.1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sspa {
    pub a_sat: f64,
    pub p: f64,
}

impl Sspa {
    pub fn new(a_sat: f64, p: f64) -> Result<Self, ChannelError> {
        if !(a_sat > 0.0) || !(p > 0.0) {
            return Err(ChannelError::InvalidParameter(format!("need a_sat > 0 and p > 0, got {a_sat}, {p}")));
        }
        Ok(Self { a_sat, p })
    }

    /// Places saturation `input_backoff_db` above `mean_input_power`.
    pub fn calibrated(params: &SspaParams, mean_input_power: f64) -> Result<Self, ChannelError> {
        if !(mean_input_power > 0.0) {
            return Err(ChannelError::InvalidParameter(format!("mean input power must be positive, got {mean_input_power}")));
        }
        Self::new((db_to_linear(params.input_backoff_db) * mean_input_power).sqrt(), params.smoothing_p)
    }

    pub fn gain(&self, a: f64) -> f64 {
        let two_p = 2.0 * self.p;
        a / (1.0 + (a / self.a_sat).powf(two_p)).powf(1.0 / two_p)
    }

    pub fn apply(&self, x: &[Complex64]) -> TimeSymbol {
        let out = x
            .iter()
            .map(|&v| {
                let a = v.norm();
                if a == 0.0 {
                    v
                } else {
                    v * (self.gain(a) / a)
                }
            })
            .collect();
        TimeSymbol::new(out).expect("finite input gives finite output")
    }
}
