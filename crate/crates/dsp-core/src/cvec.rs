//! Small helpers on complex slices. Inner products conjugate the left operand.

use num_complex::Complex64;

pub fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|v| v.norm_sqr()).sum()
}

pub fn norm(a: &[Complex64]) -> f64 {
    norm_sqr(a).sqrt()
}

pub fn max_abs_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max)
}

pub fn max_abs(a: &[Complex64]) -> f64 {
    max_abs_sqr(a).sqrt()
}

/// `a^H b`
pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn sub(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Complex64], s: f64) -> Vec<Complex64> {
    a.iter().map(|x| x * s).collect()
}

/// `a + s*b`
pub fn axpy(a: &[Complex64], s: f64, b: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y * s).collect()
}

pub fn dist_sqr(a: &[Complex64], b: &[Complex64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum()
}

pub fn first_non_finite(a: &[Complex64]) -> Option<usize> {
    a.iter().position(|v| !v.re.is_finite() || !v.im.is_finite())
}
