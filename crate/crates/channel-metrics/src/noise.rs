//! Additive white Gaussian noise referenced to E_b/N₀.
//!
//! With `x = Ac` and `c` recovered as the unnormalized DFT of `x`, white time-domain
//! noise of variance σ² per sample shows up on each carrier with variance `ℓN·σ²`.
//! Setting `σ² = N₀/(ℓN)` therefore gives per-carrier noise `N₀`, and
//! `E_b = Ē_s / (M · bits_per_symbol)` with `Ē_s` the mean carrier-domain symbol energy.

use dsp_core::{db_to_linear, Complex64, TimeSymbol};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::ChannelError;

/// `E_b` from the mean symbol energy over all carriers.
pub fn energy_per_bit(mean_symbol_energy: f64, m_data: usize, bits_per_symbol: usize) -> f64 {
    mean_symbol_energy / (m_data * bits_per_symbol) as f64
}

/// Per-sample complex noise variance for a length-`len` symbol.
pub fn noise_variance(eb: f64, ebn0_db: f64, len: usize) -> f64 {
    eb / db_to_linear(ebn0_db) / len as f64
}

/// Adds circular complex Gaussian noise with `E|n|² = variance`.
pub fn awgn_with_variance<R: Rng + ?Sized>(x: &[Complex64], variance: f64, rng: &mut R) -> TimeSymbol {
    let s = (variance / 2.0).sqrt();
    let out = x
        .iter()
        .map(|&v| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            v + Complex64::new(re * s, im * s)
        })
        .collect();
    TimeSymbol::new(out).expect("finite noise")
}

pub fn awgn<R: Rng + ?Sized>(x: &[Complex64], ebn0_db: f64, eb: f64, rng: &mut R) -> Result<TimeSymbol, ChannelError> {
    if !(eb > 0.0) {
        return Err(ChannelError::InvalidParameter(format!("E_b must be positive, got {eb}")));
    }
    Ok(awgn_with_variance(x, noise_variance(eb, ebn0_db, x.len()), rng))
}
