//! Unit-energy Gray-mapped QPSK and 16-QAM.
//!
//! QPSK: `b0 b1 -> ((1-2b0) + j(1-2b1))/√2`.
//! 16-QAM: the first two bits pick the in-phase level and the last two the
//! quadrature level, each through `00->+3, 01->+1, 11->-1, 10->-3`, scaled by 1/√10.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::carriers::CarrierPlan;
use crate::error::DspError;
use crate::symbol::FreqSymbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstellationKind {
    Qpsk,
    Qam16,
}

impl FromStr for ConstellationKind {
    type Err = DspError;
    fn from_str(s: &str) -> Result<Self, DspError> {
        match s.to_ascii_lowercase().as_str() {
            "qpsk" | "4qam" => Ok(Self::Qpsk),
            "qam16" | "16qam" | "16-qam" => Ok(Self::Qam16),
            other => Err(DspError::UnknownConstellation(other.into())),
        }
    }
}

impl fmt::Display for ConstellationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Qpsk => "qpsk",
            Self::Qam16 => "qam16",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    kind: ConstellationKind,
    /// Indexed by the bit pattern read MSB first.
    points: Vec<Complex64>,
}

fn gray_level_16(b0: bool, b1: bool) -> f64 {
    match (b0, b1) {
        (false, false) => 3.0,
        (false, true) => 1.0,
        (true, true) => -1.0,
        (true, false) => -3.0,
    }
}

impl Constellation {
    pub fn new(kind: ConstellationKind) -> Self {
        let points = match kind {
            ConstellationKind::Qpsk => (0..4u32)
                .map(|p| {
                    let b0 = (p >> 1) & 1;
                    let b1 = p & 1;
                    Complex64::new(1.0 - 2.0 * b0 as f64, 1.0 - 2.0 * b1 as f64)
                        / std::f64::consts::SQRT_2
                })
                .collect(),
            ConstellationKind::Qam16 => (0..16u32)
                .map(|p| {
                    let bit = |k: u32| (p >> (3 - k)) & 1 == 1;
                    Complex64::new(gray_level_16(bit(0), bit(1)), gray_level_16(bit(2), bit(3)))
                        / 10f64.sqrt()
                })
                .collect(),
        };
        Self { kind, points }
    }

    pub fn kind(&self) -> ConstellationKind {
        self.kind
    }

    pub fn bits_per_symbol(&self) -> usize {
        match self.kind {
            ConstellationKind::Qpsk => 2,
            ConstellationKind::Qam16 => 4,
        }
    }

    /// Points indexed by their MSB-first bit pattern.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn point(&self, bits: &[bool]) -> Complex64 {
        let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.points[idx]
    }

    /// Pattern index of the nearest point.
    pub fn nearest(&self, v: Complex64) -> usize {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            let d = (v - p).norm_sqr();
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        best
    }

    /// Places Gray-mapped points on the data carriers; free carriers are zero.
    pub fn map_bits(&self, bits: &[bool], plan: &CarrierPlan) -> Result<FreqSymbol, DspError> {
        let k = self.bits_per_symbol();
        let expected = plan.m() * k;
        if bits.len() != expected {
            return Err(DspError::BitCount { expected, got: bits.len() });
        }
        let mut c = vec![Complex64::new(0.0, 0.0); plan.n()];
        for (chunk, &i) in bits.chunks(k).zip(plan.data()) {
            c[i] = self.point(chunk);
        }
        FreqSymbol::new(c)
    }

    /// Minimum-distance hard decisions on the data carriers.
    pub fn demap_bits(&self, c: &[Complex64], plan: &CarrierPlan) -> Result<Vec<bool>, DspError> {
        if c.len() != plan.n() {
            return Err(DspError::LengthMismatch { expected: plan.n(), got: c.len() });
        }
        let k = self.bits_per_symbol();
        let mut out = Vec::with_capacity(plan.m() * k);
        for &i in plan.data() {
            let idx = self.nearest(c[i]);
            out.extend((0..k).rev().map(|s| (idx >> s) & 1 == 1));
        }
        Ok(out)
    }
}
