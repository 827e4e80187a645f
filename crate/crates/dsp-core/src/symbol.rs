//! Length-checked newtypes for frequency-domain carriers and time-domain samples.

use std::ops::Deref;

use num_complex::Complex64;

use crate::cvec;
use crate::error::DspError;

/// Carrier vector `c` of length N.
#[derive(Debug, Clone, PartialEq)]
pub struct FreqSymbol(Vec<Complex64>);

/// Oversampled time-domain samples `x` of length ℓN.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSymbol(Vec<Complex64>);

impl FreqSymbol {
    pub fn new(carriers: Vec<Complex64>) -> Result<Self, DspError> {
        if carriers.len() < 2 {
            return Err(DspError::LengthMismatch { expected: 2, got: carriers.len() });
        }
        if let Some(i) = cvec::first_non_finite(&carriers) {
            return Err(DspError::NonFinite(i));
        }
        Ok(Self(carriers))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Complex64::new(0.0, 0.0); n])
    }

    pub(crate) fn from_vec_unchecked(v: Vec<Complex64>) -> Self {
        Self(v)
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    pub fn energy(&self) -> f64 {
        cvec::norm_sqr(&self.0)
    }
}

impl TimeSymbol {
    pub fn new(samples: Vec<Complex64>) -> Result<Self, DspError> {
        if samples.is_empty() {
            return Err(DspError::LengthMismatch { expected: 1, got: 0 });
        }
        if let Some(i) = cvec::first_non_finite(&samples) {
            return Err(DspError::NonFinite(i));
        }
        Ok(Self(samples))
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![Complex64::new(0.0, 0.0); len])
    }

    pub(crate) fn from_vec_unchecked(v: Vec<Complex64>) -> Self {
        Self(v)
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    pub fn energy(&self) -> f64 {
        cvec::norm_sqr(&self.0)
    }

    /// Mean power per sample, `‖x‖² / len`.
    pub fn mean_power(&self) -> f64 {
        self.energy() / self.0.len() as f64
    }
}

impl Deref for FreqSymbol {
    type Target = [Complex64];
    fn deref(&self) -> &[Complex64] {
        &self.0
    }
}

impl Deref for TimeSymbol {
    type Target = [Complex64];
    fn deref(&self) -> &[Complex64] {
        &self.0
    }
}

impl TryFrom<Vec<Complex64>> for FreqSymbol {
    type Error = DspError;
    fn try_from(v: Vec<Complex64>) -> Result<Self, DspError> {
        Self::new(v)
    }
}

impl TryFrom<Vec<Complex64>> for TimeSymbol {
    type Error = DspError;
    fn try_from(v: Vec<Complex64>) -> Result<Self, DspError> {
        Self::new(v)
    }
}
