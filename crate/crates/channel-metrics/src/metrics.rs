//! EVM, CCDF and BER, plus an accumulator that merges across workers.

use dsp_core::{CarrierPlan, Complex64};

use crate::error::ChannelError;
use crate::psd::Psd;

/// `‖S_D(c − c_o)‖² / ‖c_o‖²` for one symbol.
pub fn evm_ratio(c: &[Complex64], c_o: &[Complex64], plan: &CarrierPlan) -> Result<f64, ChannelError> {
    if c.len() != c_o.len() {
        return Err(ChannelError::LengthMismatch { left: c.len(), right: c_o.len() });
    }
    let e: f64 = c_o.iter().map(|v| v.norm_sqr()).sum();
    if e == 0.0 {
        return Err(ChannelError::InvalidParameter("reference symbol has zero energy".into()));
    }
    Ok(plan.data_dist_sqr(c, c_o) / e)
}

/// `10·log10` of the mean per-symbol EVM ratio; `-∞` when nothing changed.
pub fn evm_db<S: AsRef<[Complex64]>>(c_opt: &[S], c_o: &[S], plan: &CarrierPlan) -> Result<f64, ChannelError> {
    if c_opt.len() != c_o.len() {
        return Err(ChannelError::LengthMismatch { left: c_opt.len(), right: c_o.len() });
    }
    if c_opt.is_empty() {
        return Err(ChannelError::Empty);
    }
    let mut sum = 0.0;
    for (c, o) in c_opt.iter().zip(c_o) {
        sum += evm_ratio(c.as_ref(), o.as_ref(), plan)?;
    }
    Ok(ratio_to_db(sum / c_opt.len() as f64))
}

fn ratio_to_db(r: f64) -> f64 {
    if r == 0.0 {
        f64::NEG_INFINITY
    } else {
        10.0 * r.log10()
    }
}

/// Empirical `P(PAPR > T)` for each threshold.
pub fn ccdf(samples_db: &[f64], thresholds: &[f64]) -> Result<Vec<f64>, ChannelError> {
    if samples_db.is_empty() {
        return Err(ChannelError::Empty);
    }
    let mut sorted = samples_db.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    Ok(thresholds
        .iter()
        .map(|&t| {
            let at_or_below = sorted.partition_point(|&v| v <= t);
            (sorted.len() - at_or_below) as f64 / n
        })
        .collect())
}

/// Fraction of differing bits.
pub fn ber(tx: &[bool], rx: &[bool]) -> Result<f64, ChannelError> {
    if tx.len() != rx.len() {
        return Err(ChannelError::LengthMismatch { left: tx.len(), right: rx.len() });
    }
    if tx.is_empty() {
        return Err(ChannelError::Empty);
    }
    Ok(count_errors(tx, rx) as f64 / tx.len() as f64)
}

fn count_errors(tx: &[bool], rx: &[bool]) -> u64 {
    tx.iter().zip(rx).filter(|(a, b)| a != b).count() as u64
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricAccumulator {
    pub papr_db: Vec<f64>,
    pub evm_ratio_sum: f64,
    pub evm_count: u64,
    pub bit_errors: u64,
    pub bits_total: u64,
    pub psd: Option<Psd>,
}

impl MetricAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_papr_db(&mut self, v: f64) {
        self.papr_db.push(v);
    }

    pub fn push_evm(&mut self, c: &[Complex64], c_o: &[Complex64], plan: &CarrierPlan) -> Result<(), ChannelError> {
        self.evm_ratio_sum += evm_ratio(c, c_o, plan)?;
        self.evm_count += 1;
        Ok(())
    }

    pub fn push_bits(&mut self, tx: &[bool], rx: &[bool]) -> Result<(), ChannelError> {
        if tx.len() != rx.len() {
            return Err(ChannelError::LengthMismatch { left: tx.len(), right: rx.len() });
        }
        self.bit_errors += count_errors(tx, rx);
        self.bits_total += tx.len() as u64;
        Ok(())
    }

    pub fn push_psd(&mut self, p: &Psd) -> Result<(), ChannelError> {
        match &mut self.psd {
            Some(acc) => acc.merge(p),
            None => {
                self.psd = Some(p.clone());
                Ok(())
            }
        }
    }

    /// Combines two accumulators; PAPR samples keep `self` first.
    pub fn merge(mut self, other: MetricAccumulator) -> Result<Self, ChannelError> {
        self.papr_db.extend(other.papr_db);
        self.evm_ratio_sum += other.evm_ratio_sum;
        self.evm_count += other.evm_count;
        self.bit_errors += other.bit_errors;
        self.bits_total += other.bits_total;
        if let Some(p) = other.psd {
            self.push_psd(&p)?;
        }
        Ok(self)
    }

    pub fn evm_db(&self) -> Result<f64, ChannelError> {
        if self.evm_count == 0 {
            return Err(ChannelError::Empty);
        }
        Ok(ratio_to_db(self.evm_ratio_sum / self.evm_count as f64))
    }

    pub fn ber(&self) -> Result<f64, ChannelError> {
        if self.bits_total == 0 {
            return Err(ChannelError::Empty);
        }
        Ok(self.bit_errors as f64 / self.bits_total as f64)
    }

    pub fn ccdf(&self, thresholds: &[f64]) -> Result<Vec<f64>, ChannelError> {
        ccdf(&self.papr_db, thresholds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evm_examples() {
        let plan = CarrierPlan::from_free(2, &[1]).unwrap();
        let c_o = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        assert_eq!(evm_db(&[c_o.clone()], &[c_o.clone()], &plan).unwrap(), f64::NEG_INFINITY);
        let c = vec![Complex64::new(1.1, 0.0), Complex64::new(5.0, 0.0)];
        assert!((evm_db(&[c], &[c_o], &plan).unwrap() + 20.0).abs() < 1e-12);
    }

    #[test]
    fn ccdf_step() {
        let s = vec![4.0; 10];
        assert_eq!(ccdf(&s, &[3.9, 4.0, 4.1]).unwrap(), vec![1.0, 0.0, 0.0]);
        assert_eq!(ccdf(&[], &[1.0]), Err(ChannelError::Empty));
    }

    #[test]
    fn ber_examples() {
        let a = vec![false; 10_000];
        assert_eq!(ber(&a, &a).unwrap(), 0.0);
        let inv: Vec<bool> = a.iter().map(|b| !b).collect();
        assert_eq!(ber(&a, &inv).unwrap(), 1.0);
        let mut one = a.clone();
        one[17] = true;
        assert_eq!(ber(&a, &one).unwrap(), 1e-4);
        assert!(ber(&a, &a[..5]).is_err());
    }

    #[test]
    fn merge_is_additive() {
        let plan = CarrierPlan::from_free(2, &[1]).unwrap();
        let c_o = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let c = vec![Complex64::new(1.1, 0.0), Complex64::new(0.0, 0.0)];
        let mut a = MetricAccumulator::new();
        a.push_evm(&c, &c_o, &plan).unwrap();
        a.push_bits(&[true, false], &[true, true]).unwrap();
        a.push_papr_db(3.0);
        let mut b = MetricAccumulator::new();
        b.push_evm(&c_o, &c_o, &plan).unwrap();
        b.push_bits(&[true, false], &[true, false]).unwrap();
        b.push_papr_db(5.0);
        let m = a.merge(b).unwrap();
        assert_eq!(m.bits_total, 4);
        assert_eq!(m.ber().unwrap(), 0.25);
        assert!((m.evm_db().unwrap() - 10.0 * (0.005f64).log10()).abs() < 1e-12);
        assert_eq!(m.ccdf(&[4.0]).unwrap(), vec![0.5]);
    }
}
