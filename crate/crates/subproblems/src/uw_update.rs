//! Auxiliary-variable step of the relaxed model: the joint minimizer in (u, w) of
//! `Re(y1ᴴ(ac − u)) + Re(y2ᴴ(x − w)) + (ρ̃/2)‖u − w‖² + (ρ/2)(‖ac − u‖² + ‖x − w‖²)`.
//!
//! Inside the iteration `y2 = −y1` always holds, and the solution collapses to
//! `u = (y1 + ρ̃x + (ρ+ρ̃)ac)/(2ρ̃+ρ)`, `w = (y2 + (ρ̃+ρ)x + ρ̃ac)/(2ρ̃+ρ)`.
//! The general 2×2 solve below keeps the step exact for arbitrary multipliers.

use dsp_core::{Complex64, DspError, TimeSymbol};

use crate::error::SubproblemError;

pub fn uw_update(
    x: &[Complex64],
    ac: &[Complex64],
    y1: &[Complex64],
    y2: &[Complex64],
    rho: f64,
    rho_tilde: f64,
) -> Result<(TimeSymbol, TimeSymbol), SubproblemError> {
    let len = x.len();
    for other in [ac.len(), y1.len(), y2.len()] {
        if other != len {
            return Err(DspError::LengthMismatch { expected: len, got: other }.into());
        }
    }
    if !(rho > 0.0) {
        return Err(SubproblemError::NonPositiveWeight(rho));
    }
    if !(rho_tilde > 0.0) {
        return Err(SubproblemError::NonPositiveWeight(rho_tilde));
    }
    // [(ρ̃+ρ)  −ρ̃ ; −ρ̃  (ρ̃+ρ)] [u; w] = [y1 + ρ ac; y2 + ρ x]
    let diag = rho_tilde + rho;
    let inv_det = 1.0 / (rho * (rho + 2.0 * rho_tilde));
    let mut u = Vec::with_capacity(len);
    let mut w = Vec::with_capacity(len);
    for i in 0..len {
        let p = y1[i] + ac[i] * rho;
        let q = y2[i] + x[i] * rho;
        u.push((p * diag + q * rho_tilde) * inv_det);
        w.push((p * rho_tilde + q * diag) * inv_det);
    }
    Ok((TimeSymbol::new(u)?, TimeSymbol::new(w)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consensus_is_fixed() {
        let v: Vec<_> = (0..6).map(|i| Complex64::new(i as f64, 1.0)).collect();
        let z = vec![Complex64::new(0.0, 0.0); 6];
        let (u, w) = uw_update(&v, &v, &z, &z, 300.0, 100.0).unwrap();
        for i in 0..6 {
            assert!((u[i] - v[i]).norm() < 1e-12);
            assert!((w[i] - v[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn matches_collapsed_form_when_multipliers_cancel() {
        let x: Vec<_> = (0..4).map(|i| Complex64::new(i as f64, -1.0)).collect();
        let ac: Vec<_> = (0..4).map(|i| Complex64::new(0.5, i as f64)).collect();
        let y1: Vec<_> = (0..4).map(|i| Complex64::new(3.0 - i as f64, 2.0)).collect();
        let y2: Vec<_> = y1.iter().map(|v| -v).collect();
        let (rho, rt) = (300.0, 100.0);
        let (u, w) = uw_update(&x, &ac, &y1, &y2, rho, rt).unwrap();
        let den = 2.0 * rt + rho;
        for i in 0..4 {
            let uc = (y1[i] + x[i] * rt + ac[i] * (rho + rt)) / den;
            let wc = (y2[i] + x[i] * (rt + rho) + ac[i] * rt) / den;
            assert!((u[i] - uc).norm() < 1e-13);
            assert!((w[i] - wc).norm() < 1e-13);
        }
    }

    #[test]
    fn rejects_bad_weights() {
        let v = vec![Complex64::new(1.0, 0.0); 2];
        assert!(uw_update(&v, &v, &v, &v, 0.0, 1.0).is_err());
        assert!(uw_update(&v, &v, &v[..1], &v, 3.0, 1.0).is_err());
    }
}
