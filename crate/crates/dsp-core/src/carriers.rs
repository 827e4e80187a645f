//! Data/free carrier partitions of the N bins.

use num_complex::Complex64;

use crate::error::DspError;

/// Disjoint data set D and free set F covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarrierPlan {
    is_data: Vec<bool>,
    data: Vec<usize>,
    free: Vec<usize>,
}

impl CarrierPlan {
    /// Builds a plan from the free-bin list; everything else carries data.
    pub fn from_free(n: usize, free: &[usize]) -> Result<Self, DspError> {
        if n < 2 {
            return Err(DspError::InvalidPlan(format!("need at least 2 carriers, got {n}")));
        }
        let mut is_data = vec![true; n];
        for &f in free {
            if f >= n {
                return Err(DspError::InvalidPlan(format!("free bin {f} outside 0..{n}")));
            }
            if !is_data[f] {
                return Err(DspError::InvalidPlan(format!("free bin {f} listed twice")));
            }
            is_data[f] = false;
        }
        let data: Vec<usize> = (0..n).filter(|&i| is_data[i]).collect();
        if data.is_empty() {
            return Err(DspError::InvalidPlan("no data carriers".into()));
        }
        let free = (0..n).filter(|&i| !is_data[i]).collect();
        Ok(Self { is_data, data, free })
    }

    /// DC plus the highest `n_free - 1` bins are free.
    pub fn guard_band(n: usize, n_free: usize) -> Result<Self, DspError> {
        if n_free >= n {
            return Err(DspError::InvalidPlan(format!("{n_free} free bins leave no data among {n}")));
        }
        let free: Vec<usize> = if n_free == 0 {
            Vec::new()
        } else {
            std::iter::once(0).chain(n - (n_free - 1)..n).collect()
        };
        Self::from_free(n, &free)
    }

    /// 802.11a-like layout: for N=64, bin 0 and bins 53..=63 are free.
    pub fn standard(n: usize) -> Result<Self, DspError> {
        Self::guard_band(n, (12 * n / 64).max(1))
    }

    pub fn n(&self) -> usize {
        self.is_data.len()
    }

    /// Number of data carriers M.
    pub fn m(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[usize] {
        &self.data
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn is_data(&self, i: usize) -> bool {
        self.is_data[i]
    }

    /// (‖S_D c‖², ‖S_F c‖²)
    pub fn split_energy(&self, c: &[Complex64]) -> (f64, f64) {
        let mut d = 0.0;
        let mut f = 0.0;
        for (v, &isd) in c.iter().zip(&self.is_data) {
            if isd {
                d += v.norm_sqr();
            } else {
                f += v.norm_sqr();
            }
        }
        (d, f)
    }

    /// Free-carrier power overhead ‖S_F c‖²/‖S_D c‖².
    pub fn fcpo(&self, c: &[Complex64]) -> f64 {
        let (d, f) = self.split_energy(c);
        if f == 0.0 {
            0.0
        } else {
            f / d
        }
    }

    /// ‖S_D (a - b)‖²
    pub fn data_dist_sqr(&self, a: &[Complex64], b: &[Complex64]) -> f64 {
        self.data.iter().map(|&i| (a[i] - b[i]).norm_sqr()).sum()
    }

    /// `S_D c`
    pub fn mask_data(&self, c: &[Complex64]) -> Vec<Complex64> {
        c.iter()
            .zip(&self.is_data)
            .map(|(v, &isd)| if isd { *v } else { Complex64::new(0.0, 0.0) })
            .collect()
    }
}
