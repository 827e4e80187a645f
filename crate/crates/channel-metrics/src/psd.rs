//! Welch-averaged periodogram.
//!
//! Bin `k` holds `|Σ w_n x_n e^{−j2πkn/L}|² / Σ w_n²`, averaged over segments, so
//! `Σ_k S_k / L` is the mean power for the rectangular window. Bins are in DFT
//! order; [`Psd::centered_db`] applies the fftshift for display.

use dsp_core::Complex64;
use rustfft::FftPlanner;

use crate::error::ChannelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Rectangular,
    Hann,
}

impl Window {
    pub fn coefficients(self, len: usize) -> Vec<f64> {
        match self {
            Window::Rectangular => vec![1.0; len],
            Window::Hann => (0..len)
                .map(|n| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * n as f64 / len as f64).cos())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Psd {
    /// Summed per-segment periodograms.
    pub sum: Vec<f64>,
    pub segments: usize,
}

impl Psd {
    pub fn empty(seg_len: usize) -> Self {
        Self { sum: vec![0.0; seg_len], segments: 0 }
    }

    pub fn seg_len(&self) -> usize {
        self.sum.len()
    }

    pub fn bins(&self) -> Vec<f64> {
        let k = self.segments.max(1) as f64;
        self.sum.iter().map(|v| v / k).collect()
    }

    /// `Σ_k S_k · (1/L)`
    pub fn total_power(&self) -> f64 {
        self.bins().iter().sum::<f64>() / self.seg_len() as f64
    }

    pub fn merge(&mut self, other: &Psd) -> Result<(), ChannelError> {
        if self.sum.len() != other.sum.len() {
            return Err(ChannelError::LengthMismatch { left: self.sum.len(), right: other.sum.len() });
        }
        self.sum.iter_mut().zip(&other.sum).for_each(|(a, b)| *a += b);
        self.segments += other.segments;
        Ok(())
    }

    /// fftshifted spectrum in dB relative to its peak, with normalized frequencies in [−0.5, 0.5).
    pub fn centered_db(&self) -> Vec<(f64, f64)> {
        let bins = self.bins();
        let l = bins.len();
        let peak = bins.iter().copied().fold(0.0, f64::max);
        (0..l)
            .map(|i| {
                let k = (i + l / 2 + l % 2) % l;
                let f = if k >= (l + 1) / 2 { k as f64 - l as f64 } else { k as f64 } / l as f64;
                (f, 10.0 * (bins[k] / peak).log10())
            })
            .collect()
    }

    /// Mean level of `out_band` bins relative to `in_band` bins, in dB.
    pub fn band_ratio_db(&self, in_band: &[usize], out_band: &[usize]) -> f64 {
        let bins = self.bins();
        let mean = |idx: &[usize]| idx.iter().map(|&i| bins[i]).sum::<f64>() / idx.len() as f64;
        10.0 * (mean(out_band) / mean(in_band)).log10()
    }
}

/// Averages windowed periodograms over segments of `seg_len` with the given hop.
pub fn welch(x: &[Complex64], seg_len: usize, window: Window, hop: usize) -> Result<Psd, ChannelError> {
    if seg_len == 0 || hop == 0 {
        return Err(ChannelError::InvalidParameter("segment length and hop must be positive".into()));
    }
    if x.len() < seg_len {
        return Err(ChannelError::Empty);
    }
    let w = window.coefficients(seg_len);
    let w2: f64 = w.iter().map(|v| v * v).sum();
    let fft = FftPlanner::new().plan_fft_forward(seg_len);
    let mut psd = Psd::empty(seg_len);
    let mut buf = vec![Complex64::new(0.0, 0.0); seg_len];
    let mut start = 0;
    while start + seg_len <= x.len() {
        for (b, (s, wv)) in buf.iter_mut().zip(x[start..start + seg_len].iter().zip(&w)) {
            *b = s * wv;
        }
        fft.process(&mut buf);
        psd.sum.iter_mut().zip(&buf).for_each(|(acc, v)| *acc += v.norm_sqr() / w2);
        psd.segments += 1;
        start += hop;
    }
    Ok(psd)
}
