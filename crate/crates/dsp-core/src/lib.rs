//! Signal-level building blocks for oversampled OFDM: the zero-padded
//! IDFT/DFT pair, PAPR, carrier plans and Gray-mapped constellations.

pub mod carriers;
pub mod constellation;
pub mod cvec;
pub mod error;
pub mod symbol;
pub mod transform;

pub use carriers::CarrierPlan;
pub use constellation::{Constellation, ConstellationKind};
pub use error::DspError;
pub use num_complex::Complex64;
pub use symbol::{FreqSymbol, TimeSymbol};
pub use transform::{fft_oversampled, ifft_oversampled, papr, papr_db, Ofdm};

/// Converts a dB quantity to a linear power ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Converts a linear power ratio to dB.
pub fn linear_to_db(lin: f64) -> f64 {
    10.0 * lin.log10()
}
