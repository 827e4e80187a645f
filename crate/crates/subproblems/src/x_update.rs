//! PAPR projection. For input `b`, the closest `x` with `papr(x) ≤ α` is
//! `x = t z`, where `z` maximizes `Re(zᴴb)` over `‖z‖ ≤ 1`,
//! `|z_i| ≤ √(α/ℓN)` and `t = max(0, Re(zᴴb))`. The maximizer is
//! `z_i = min(|b_i|/(2γ), cap)·e^{jφ(b_i)}` with γ tuned so `‖z‖ = 1`.

use dsp_core::{cvec, Complex64, TimeSymbol};

use crate::error::SubproblemError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectionConfig {
    pub gamma_left0: f64,
    pub gamma_right0: f64,
    pub max_iters: usize,
    /// Stop once `|‖z‖² − 1| ≤ tol`.
    pub tol: f64,
    pub expand_factor: f64,
    pub max_expansions: usize,
}

impl Default for BisectionConfig {
    fn default() -> Self {
        Self {
            gamma_left0: 0.0,
            gamma_right0: 100.0,
            max_iters: 60,
            tol: 1e-8,
            expand_factor: 2.0,
            max_expansions: 20,
        }
    }
}

impl BisectionConfig {
    pub fn validate(&self) -> Result<(), SubproblemError> {
        if !(self.gamma_left0 >= 0.0 && self.gamma_left0 < self.gamma_right0) {
            return Err(SubproblemError::InvalidBisection("need 0 <= gamma_left0 < gamma_right0"));
        }
        if !(self.tol > 0.0) {
            return Err(SubproblemError::InvalidBisection("tol must be positive"));
        }
        if !(self.expand_factor > 1.0) {
            return Err(SubproblemError::InvalidBisection("expand_factor must exceed 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZProjection {
    pub z: Vec<Complex64>,
    /// Zero only in the rare case where clipping every non-zero entry cannot reach unit norm.
    pub gamma_star: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct XUpdateResult {
    pub x_next: TimeSymbol,
    pub z: Vec<Complex64>,
    pub t: f64,
    pub gamma_star: f64,
}

/// `z(γ)` for a fixed γ > 0.
pub fn z_of_gamma(b: &[Complex64], gamma: f64, alpha: f64) -> Vec<Complex64> {
    let cap = (alpha / b.len() as f64).sqrt();
    b.iter()
        .map(|&bi| {
            let m = bi.norm() / (2.0 * gamma);
            if m < cap {
                bi / (2.0 * gamma)
            } else {
                Complex64::from_polar(cap, phase(bi))
            }
        })
        .collect()
}

fn phase(v: Complex64) -> f64 {
    if v.re == 0.0 && v.im == 0.0 {
        0.0
    } else {
        v.arg()
    }
}

/// ‖z(γ)‖² from precomputed `|b_i|²`.
fn norm_sqr_at(mag2: &[f64], gamma: f64, cap2: f64) -> f64 {
    let s = 1.0 / (4.0 * gamma * gamma);
    mag2.iter().map(|&m| (m * s).min(cap2)).sum()
}

pub fn z_projection(
    b: &[Complex64],
    alpha: f64,
    cfg: &BisectionConfig,
) -> Result<ZProjection, SubproblemError> {
    if !(alpha >= 1.0) {
        return Err(SubproblemError::InvalidAlpha(alpha));
    }
    cfg.validate()?;
    if let Some(i) = cvec::first_non_finite(b) {
        return Err(dsp_core::DspError::NonFinite(i).into());
    }
    let len = b.len();
    let cap2 = alpha / len as f64;
    let mag2: Vec<f64> = b.iter().map(|v| v.norm_sqr()).collect();
    let energy: f64 = mag2.iter().sum();
    if energy == 0.0 {
        return Err(SubproblemError::ZeroInput);
    }

    let nnz = mag2.iter().filter(|&&m| m > 0.0).count();
    if (nnz as f64) * cap2 < 1.0 {
        // Even with every non-zero entry at the cap the norm stays below one;
        // the remaining energy goes to the zero entries with phase 0.
        let fill = ((1.0 - nnz as f64 * cap2) / (len - nnz) as f64).sqrt();
        let cap = cap2.sqrt();
        let z = b
            .iter()
            .map(|&bi| if bi.norm_sqr() > 0.0 { Complex64::from_polar(cap, bi.arg()) } else { Complex64::new(fill, 0.0) })
            .collect();
        return Ok(ZProjection { z, gamma_star: 0.0, iterations: 0 });
    }

    // At γ = ‖b‖/2 every entry is below its unclipped value |b_i|/‖b‖, so the norm is at most one.
    let mut right = cfg.gamma_right0.min(energy.sqrt() / 2.0);
    let mut left = cfg.gamma_left0.min(right / 2.0);
    let mut expansions = 0;
    let mut n2 = norm_sqr_at(&mag2, right, cap2);
    while n2 > 1.0 + cfg.tol {
        if expansions == cfg.max_expansions {
            return Err(SubproblemError::NoBracket { gamma_right: right, norm_sqr: n2, expansions });
        }
        left = right;
        right *= cfg.expand_factor;
        n2 = norm_sqr_at(&mag2, right, cap2);
        expansions += 1;
    }

    let mut gamma = right;
    let mut iterations = 0;
    if (n2 - 1.0).abs() > cfg.tol {
        for it in 0..cfg.max_iters {
            iterations = it + 1;
            let mid = 0.5 * (left + right);
            let nm = norm_sqr_at(&mag2, mid, cap2);
            if (nm - 1.0).abs() <= cfg.tol {
                gamma = mid;
                break;
            }
            if nm > 1.0 {
                left = mid;
            } else {
                right = mid;
            }
            gamma = right;
        }
    }
    Ok(ZProjection { z: z_of_gamma(b, gamma, alpha), gamma_star: gamma, iterations })
}

pub fn x_update(b: &[Complex64], alpha: f64, cfg: &BisectionConfig) -> Result<XUpdateResult, SubproblemError> {
    let proj = z_projection(b, alpha, cfg)?;
    let t = cvec::dot(&proj.z, b).re.max(0.0);
    let x = TimeSymbol::new(cvec::scale(&proj.z, t))?;
    Ok(XUpdateResult { x_next: x, z: proj.z, t, gamma_star: proj.gamma_star })
}
