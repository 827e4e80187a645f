//! The oversampled transform pair.
//!
//! `ifft` maps N carriers to ℓN samples through the ℓN-point inverse DFT with
//! 1/(ℓN) normalization after zero padding, so `x = A c` with
//! `A[n,k] = exp(j2πnk/ℓN)/(ℓN)`. `fft` is the unnormalized ℓN-point DFT kept
//! to its first N bins, i.e. `ℓN·Aᴴx`. Hence `fft(ifft(c)) = c`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::cvec;
use crate::error::DspError;
use crate::symbol::{FreqSymbol, TimeSymbol};

/// Planned transform pair for fixed (N, ℓ). Cheap to clone and share.
#[derive(Clone)]
pub struct Ofdm {
    n: usize,
    ell: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for Ofdm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ofdm").field("n", &self.n).field("ell", &self.ell).finish()
    }
}

impl Ofdm {
    pub fn new(n: usize, ell: usize) -> Result<Self, DspError> {
        if ell == 0 {
            return Err(DspError::InvalidOversampling);
        }
        if n < 2 {
            return Err(DspError::InvalidPlan(format!("need at least 2 carriers, got {n}")));
        }
        let mut planner = FftPlanner::new();
        let len = n * ell;
        Ok(Self {
            n,
            ell,
            forward: planner.plan_fft_forward(len),
            inverse: planner.plan_fft_inverse(len),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// ℓN
    pub fn len(&self) -> usize {
        self.n * self.ell
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `A c`
    pub fn ifft(&self, c: &[Complex64]) -> Result<TimeSymbol, DspError> {
        if c.len() != self.n {
            return Err(DspError::LengthMismatch { expected: self.n, got: c.len() });
        }
        let len = self.len();
        let mut buf = vec![Complex64::new(0.0, 0.0); len];
        buf[..self.n].copy_from_slice(c);
        self.inverse.process(&mut buf);
        let s = 1.0 / len as f64;
        buf.iter_mut().for_each(|v| *v *= s);
        Ok(TimeSymbol::from_vec_unchecked(buf))
    }

    /// `ℓN Aᴴ x`
    pub fn fft(&self, x: &[Complex64]) -> Result<FreqSymbol, DspError> {
        let len = self.len();
        if x.len() != len {
            return Err(DspError::LengthMismatch { expected: len, got: x.len() });
        }
        let mut buf = x.to_vec();
        self.forward.process(&mut buf);
        buf.truncate(self.n);
        Ok(FreqSymbol::from_vec_unchecked(buf))
    }

    /// Full ℓN-bin forward DFT, used for spectra.
    pub fn fft_full(&self, x: &[Complex64]) -> Result<Vec<Complex64>, DspError> {
        let len = self.len();
        if x.len() != len {
            return Err(DspError::LengthMismatch { expected: len, got: x.len() });
        }
        let mut buf = x.to_vec();
        self.forward.process(&mut buf);
        Ok(buf)
    }
}

/// One-shot `A c`; plans a transform per call.
pub fn ifft_oversampled(c: &FreqSymbol, ell: usize) -> Result<TimeSymbol, DspError> {
    Ofdm::new(c.len(), ell)?.ifft(c)
}

/// One-shot `ℓN Aᴴ x` truncated to N bins; `x.len()` must be a multiple of ℓ.
pub fn fft_oversampled(x: &TimeSymbol, ell: usize) -> Result<FreqSymbol, DspError> {
    if ell == 0 {
        return Err(DspError::InvalidOversampling);
    }
    if x.len() % ell != 0 {
        return Err(DspError::LengthMismatch { expected: (x.len() / ell + 1) * ell, got: x.len() });
    }
    Ofdm::new(x.len() / ell, ell)?.fft(x)
}

/// Peak-to-average power ratio `‖x‖∞² / (‖x‖²/len)` as a linear ratio.
pub fn papr(x: &[Complex64]) -> Result<f64, DspError> {
    let e = cvec::norm_sqr(x);
    if e <= 0.0 || x.is_empty() {
        return Err(DspError::ZeroEnergy);
    }
    Ok(cvec::max_abs_sqr(x) * x.len() as f64 / e)
}

pub fn papr_db(x: &[Complex64]) -> Result<f64, DspError> {
    papr(x).map(crate::linear_to_db)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dc_carrier_is_constant() {
        for ell in 1..4 {
            let mut v = vec![c(0.0, 0.0); 8];
            v[0] = c(1.0, 0.0);
            let x = ifft_oversampled(&FreqSymbol::new(v).unwrap(), ell).unwrap();
            for s in x.iter() {
                assert!((s - c(1.0 / (8 * ell) as f64, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn constant_time_signal_is_dc() {
        let x = TimeSymbol::new(vec![c(1.0 / 16.0, 0.0); 16]).unwrap();
        let f = fft_oversampled(&x, 2).unwrap();
        assert!((f[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(f[1..].iter().all(|v| v.norm() < 1e-14));
    }

    #[test]
    fn papr_examples() {
        assert!((papr(&[c(1.0, 0.0); 4]).unwrap() - 1.0).abs() < 1e-15);
        let spike = [c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!((papr(&spike).unwrap() - 4.0).abs() < 1e-15);
        let rot = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        assert!((papr(&rot).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(papr(&[c(0.0, 0.0); 3]), Err(DspError::ZeroEnergy));
    }

    #[test]
    fn length_checks() {
        let o = Ofdm::new(4, 2).unwrap();
        assert!(o.ifft(&[c(1.0, 0.0); 3]).is_err());
        assert!(o.fft(&[c(1.0, 0.0); 4]).is_err());
        assert_eq!(Ofdm::new(4, 0).unwrap_err(), DspError::InvalidOversampling);
    }

    #[test]
    fn non_power_of_two_sizes() {
        let o = Ofdm::new(6, 3).unwrap();
        let v: Vec<_> = (0..6).map(|k| c(k as f64, -(k as f64) * 0.5)).collect();
        let back = o.fft(&o.ifft(&v).unwrap()).unwrap();
        assert!(cvec::dist_sqr(&back, &v).sqrt() < 1e-12);
    }
}
