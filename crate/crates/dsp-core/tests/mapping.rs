use dsp_core::{CarrierPlan, Constellation, ConstellationKind, DspError};
use proptest::prelude::*;

#[test]
fn qpsk_single_data_carrier() {
    let plan = CarrierPlan::from_free(2, &[1]).unwrap();
    let q = Constellation::new(ConstellationKind::Qpsk);
    let c = q.map_bits(&[false, false], &plan).unwrap();
    let s = 1.0 / 2f64.sqrt();
    assert!((c[0].re - s).abs() < 1e-15 && (c[0].im - s).abs() < 1e-15);
    assert_eq!(c[1].norm(), 0.0);
}

#[test]
fn all_zero_bits_qam16() {
    let plan = CarrierPlan::standard(64).unwrap();
    let q = Constellation::new(ConstellationKind::Qam16);
    let c = q.map_bits(&vec![false; 52 * 4], &plan).unwrap();
    let p0 = q.point(&[false; 4]);
    assert!(plan.data().iter().all(|&i| c[i] == p0));
    assert!(plan.free().iter().all(|&i| c[i].norm() == 0.0));
}

#[test]
fn wrong_bit_count() {
    let plan = CarrierPlan::standard(64).unwrap();
    let q = Constellation::new(ConstellationKind::Qpsk);
    assert_eq!(q.map_bits(&[true; 3], &plan), Err(DspError::BitCount { expected: 104, got: 3 }));
}

#[test]
fn every_point_demaps_to_its_pattern() {
    for kind in [ConstellationKind::Qpsk, ConstellationKind::Qam16] {
        let q = Constellation::new(kind);
        for (i, p) in q.points().iter().enumerate() {
            assert_eq!(q.nearest(*p), i);
        }
    }
}

proptest! {
    #[test]
    fn round_trip(bits in prop::collection::vec(any::<bool>(), 52 * 4), qam in any::<bool>()) {
        let plan = CarrierPlan::standard(64).unwrap();
        let kind = if qam { ConstellationKind::Qam16 } else { ConstellationKind::Qpsk };
        let q = Constellation::new(kind);
        let bits = &bits[..plan.m() * q.bits_per_symbol()];
        let c = q.map_bits(bits, &plan).unwrap();
        prop_assert!(plan.free().iter().all(|&i| c[i].norm() == 0.0));
        prop_assert_eq!(q.demap_bits(&c, &plan).unwrap(), bits.to_vec());
    }
}
