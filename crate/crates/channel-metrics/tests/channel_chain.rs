use channel_metrics::{awgn, awgn_with_variance, ber, ccdf, energy_per_bit, zf_equalize, Multipath, MultipathProfile, Sspa};
use dsp_core::{cvec, CarrierPlan, Complex64, Constellation, ConstellationKind, Ofdm, TimeSymbol};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::erf::erfc;

#[test]
fn zero_noise_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x: Vec<_> = (0..32).map(|i| Complex64::new(i as f64, -1.0)).collect();
    let y = awgn_with_variance(&x, 0.0, &mut rng);
    assert_eq!(y.as_slice(), x.as_slice());
    let y = awgn(&x, 400.0, 1.0, &mut rng).unwrap();
    assert!(cvec::dist_sqr(&y, &x) < 1e-30);
    assert!(awgn(&x, 10.0, 0.0, &mut rng).is_err());
}

#[test]
fn noise_variance_matches_nominal() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let zeros = vec![Complex64::new(0.0, 0.0); 1_000_000];
    let n = awgn_with_variance(&zeros, 0.37, &mut rng);
    let var = cvec::norm_sqr(&n) / n.len() as f64;
    assert!((var / 0.37 - 1.0).abs() < 0.02, "{var}");
    let re_var: f64 = n.iter().map(|v| v.re * v.re).sum::<f64>() / n.len() as f64;
    assert!((re_var / 0.185 - 1.0).abs() < 0.02);
}

#[test]
fn ideal_qpsk_matches_q_function() {
    let plan = CarrierPlan::standard(64).unwrap();
    let ofdm = Ofdm::new(64, 4).unwrap();
    let q = Constellation::new(ConstellationKind::Qpsk);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ebn0_db in [2.0, 4.0, 6.0] {
        let (mut errors, mut total) = (0usize, 0usize);
        for _ in 0..1000 {
            let bits: Vec<bool> = (0..plan.m() * 2).map(|_| rng.gen()).collect();
            let c = q.map_bits(&bits, &plan).unwrap();
            let eb = energy_per_bit(c.energy(), plan.m(), 2);
            let x = ofdm.ifft(&c).unwrap();
            let y = awgn(&x, ebn0_db, eb, &mut rng).unwrap();
            let rx = q.demap_bits(&ofdm.fft(&y).unwrap(), &plan).unwrap();
            errors += bits.iter().zip(&rx).filter(|(a, b)| a != b).count();
            total += bits.len();
        }
        let measured = errors as f64 / total as f64;
        let ebn0 = 10f64.powf(ebn0_db / 10.0);
        let theory = 0.5 * erfc(ebn0.sqrt());
        let sigma = (theory * (1.0 - theory) / total as f64).sqrt();
        assert!((measured - theory).abs() <= 3.0 * sigma, "{ebn0_db} dB: {measured} vs {theory}");
    }
}

#[test]
fn single_tap_is_identity_channel() {
    let ch = Multipath::new(&MultipathProfile::identity(80e6), 64).unwrap();
    let s = TimeSymbol::new((0..256).map(|i| Complex64::new(i as f64, 1.0)).collect()).unwrap();
    let out = ch.apply(&[s.clone(), s.clone()]);
    assert_eq!(out[0], s);
    assert_eq!(out[1], s);
}

#[test]
fn zero_forcing_restores_noiseless_symbols() {
    let plan = CarrierPlan::standard(64).unwrap();
    let ofdm = Ofdm::new(64, 4).unwrap();
    let q = Constellation::new(ConstellationKind::Qam16);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for profile in [
        MultipathProfile { taps: vec![(0.0, 1.0), (100.0, 0.5)], sample_rate: 80e6 },
        MultipathProfile::default(),
    ] {
        let ch = Multipath::new(&profile, 64).unwrap();
        let h = ch.frequency_response(64, 256);
        let cs: Vec<_> = (0..5)
            .map(|_| q.map_bits(&(0..plan.m() * 4).map(|_| rng.gen()).collect::<Vec<_>>(), &plan).unwrap())
            .collect();
        let xs: Vec<_> = cs.iter().map(|c| ofdm.ifft(c).unwrap()).collect();
        for (y, c) in ch.apply(&xs).iter().zip(&cs) {
            let eq = zf_equalize(&ofdm.fft(y).unwrap(), &h).unwrap();
            assert!(cvec::dist_sqr(&eq, c).sqrt() < 1e-10);
        }
    }
}

#[test]
fn noiseless_linear_chain_round_trips_bits() {
    let plan = CarrierPlan::standard(64).unwrap();
    let ofdm = Ofdm::new(64, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for kind in [ConstellationKind::Qpsk, ConstellationKind::Qam16] {
        let q = Constellation::new(kind);
        let bits: Vec<bool> = (0..plan.m() * q.bits_per_symbol()).map(|_| rng.gen()).collect();
        let x = ofdm.ifft(&q.map_bits(&bits, &plan).unwrap()).unwrap();
        let rx = q.demap_bits(&ofdm.fft(&x).unwrap(), &plan).unwrap();
        assert_eq!(ber(&bits, &rx).unwrap(), 0.0);
    }
}

proptest! {
    #[test]
    fn sspa_monotone_bounded_phase_preserving(a in 0.0f64..10.0, da in 0.0f64..1.0, ph in -3.1f64..3.1, sat in 0.1f64..3.0, p in 0.5f64..6.0) {
        let s = Sspa::new(sat, p).unwrap();
        prop_assert!(s.gain(a + da) >= s.gain(a) - 1e-15);
        prop_assert!(s.gain(a) <= sat + 1e-12);
        prop_assert!(s.gain(a) <= a + 1e-15);
        let out = s.apply(&[Complex64::from_polar(a.max(1e-3), ph)]);
        prop_assert!((out[0].arg() - ph).abs() < 1e-12);
    }

    #[test]
    fn ccdf_non_increasing(samples in prop::collection::vec(0.0f64..12.0, 1..200)) {
        let t: Vec<f64> = (0..=120).map(|i| i as f64 * 0.1).collect();
        let c = ccdf(&samples, &t).unwrap();
        prop_assert!(c.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(c.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }
}
