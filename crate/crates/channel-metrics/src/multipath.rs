//! Static multipath with cyclic prefix and perfect-CSI zero forcing.
//!
//! Tap delays are in nanoseconds and land on the sample grid by rounding
//! `delay · sample_rate`.

use dsp_core::{Complex64, TimeSymbol};

use crate::error::ChannelError;

#[derive(Debug, Clone, PartialEq)]
pub struct MultipathProfile {
    /// (delay in ns, real gain)
    pub taps: Vec<(f64, f64)>,
    /// Samples per second.
    pub sample_rate: f64,
}

impl Default for MultipathProfile {
    /// Four paths at 80 MS/s (20 MHz, fourfold oversampling).
    fn default() -> Self {
        Self { taps: vec![(0.0, 1.0), (190.0, 0.2), (300.0, 0.07), (400.0, 0.05)], sample_rate: 80e6 }
    }
}

impl MultipathProfile {
    pub fn identity(sample_rate: f64) -> Self {
        Self { taps: vec![(0.0, 1.0)], sample_rate }
    }

    pub fn sample_offsets(&self) -> Vec<usize> {
        self.taps.iter().map(|&(d, _)| (d * self.sample_rate / 1e9).round() as usize).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Multipath {
    fir: Vec<f64>,
    cp_len: usize,
}

impl Multipath {
    pub fn new(profile: &MultipathProfile, cp_len: usize) -> Result<Self, ChannelError> {
        match profile.taps.first() {
            Some(&(d, g)) if d == 0.0 && g == 1.0 => {}
            _ => return Err(ChannelError::InvalidParameter("first tap must be (0, 1)".into())),
        }
        if profile.taps.iter().any(|&(d, g)| !(g >= 0.0) || !(d >= 0.0)) {
            return Err(ChannelError::InvalidParameter("tap delays and gains must be non-negative".into()));
        }
        if !(profile.sample_rate > 0.0) {
            return Err(ChannelError::InvalidParameter("sample rate must be positive".into()));
        }
        let offsets = profile.sample_offsets();
        let max_delay = offsets.iter().copied().max().unwrap_or(0);
        if cp_len < max_delay {
            return Err(ChannelError::CyclicPrefixTooShort { cp: cp_len, delay: max_delay });
        }
        let mut fir = vec![0.0; max_delay + 1];
        for (&o, &(_, g)) in offsets.iter().zip(&profile.taps) {
            fir[o] += g;
        }
        Ok(Self { fir, cp_len })
    }

    pub fn fir(&self) -> &[f64] {
        &self.fir
    }

    /// Sends a symbol stream through the channel: cyclic prefix, linear convolution
    /// across symbol boundaries, prefix removal.
    pub fn apply(&self, symbols: &[TimeSymbol]) -> Vec<TimeSymbol> {
        let mut stream = Vec::new();
        for s in symbols {
            stream.extend_from_slice(&s[s.len() - self.cp_len.min(s.len())..]);
            stream.extend_from_slice(s);
        }
        let mut out = vec![Complex64::new(0.0, 0.0); stream.len()];
        for (n, o) in out.iter_mut().enumerate() {
            for (d, &g) in self.fir.iter().enumerate() {
                if g != 0.0 && d <= n {
                    *o += stream[n - d] * g;
                }
            }
        }
        let mut pos = 0;
        symbols
            .iter()
            .map(|s| {
                let cp = self.cp_len.min(s.len());
                let start = pos + cp;
                pos = start + s.len();
                TimeSymbol::new(out[start..pos].to_vec()).expect("finite")
            })
            .collect()
    }

    /// `H_k = Σ g_d e^{−j2πkd/len}` for the first `n` bins of a length-`len` DFT.
    pub fn frequency_response(&self, n: usize, len: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| {
                self.fir
                    .iter()
                    .enumerate()
                    .map(|(d, &g)| Complex64::from_polar(g, -2.0 * std::f64::consts::PI * (k * d) as f64 / len as f64))
                    .sum()
            })
            .collect()
    }
}

/// One-tap zero forcing `Y_k / H_k`.
pub fn zf_equalize(y: &[Complex64], h: &[Complex64]) -> Result<Vec<Complex64>, ChannelError> {
    if y.len() != h.len() {
        return Err(ChannelError::LengthMismatch { left: y.len(), right: h.len() });
    }
    Ok(y.iter().zip(h).map(|(a, b)| a / b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_offsets() {
        assert_eq!(MultipathProfile::default().sample_offsets(), vec![0, 15, 24, 32]);
    }

    #[test]
    fn short_prefix_rejected() {
        let err = Multipath::new(&MultipathProfile::default(), 16).unwrap_err();
        assert_eq!(err, ChannelError::CyclicPrefixTooShort { cp: 16, delay: 32 });
    }

    #[test]
    fn first_tap_must_be_direct_path() {
        let p = MultipathProfile { taps: vec![(10.0, 1.0)], sample_rate: 80e6 };
        assert!(Multipath::new(&p, 64).is_err());
    }
}
