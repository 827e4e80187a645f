use admm_relax::{
    feasible_start, lambda_min_q, multiplier_identity_residual, theorem3_bound, AdmmParams, AdmmRelax, EngineError, MultiplierInit,
    RelaxStart,
};
use dsp_core::{cvec, papr, CarrierPlan, Complex64, Constellation, ConstellationKind, FreqSymbol, Ofdm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_symbol(rng: &mut ChaCha8Rng, plan: &CarrierPlan) -> FreqSymbol {
    let q = Constellation::new(ConstellationKind::Qam16);
    let bits: Vec<bool> = (0..plan.m() * 4).map(|_| rng.gen()).collect();
    q.map_bits(&bits, plan).unwrap()
}

fn engine(params: AdmmParams) -> AdmmRelax {
    AdmmRelax::new(Ofdm::new(64, 4).unwrap(), CarrierPlan::standard(64).unwrap(), params).unwrap()
}

#[test]
fn rejects_weak_penalty() {
    let p = AdmmParams { rho: 200.0, rho_tilde: 100.0, ..AdmmParams::relax_default() };
    let err = AdmmRelax::new(Ofdm::new(64, 4).unwrap(), CarrierPlan::standard(64).unwrap(), p).unwrap_err();
    assert!(matches!(err, EngineError::InvalidParams(_)));
    let p = AdmmParams { rho_tilde: 0.0, ..AdmmParams::relax_default() };
    assert!(AdmmRelax::new(Ofdm::new(64, 4).unwrap(), CarrierPlan::standard(64).unwrap(), p).is_err());
}

#[test]
fn fixed_point_has_zero_descent() {
    let e = engine(AdmmParams::relax_default());
    let mut c = vec![Complex64::new(0.0, 0.0); 64];
    c[3] = Complex64::new(1.0, 0.0);
    let c_o = FreqSymbol::new(c).unwrap();
    // a constant-modulus symbol is feasible, so the feasible start is already stationary
    let out = e.solve_from(&c_o, &RelaxStart::Feasible(c_o.clone())).unwrap();
    for t in &out.report.trace {
        assert!(t.descent_lhs.abs() < 1e-12 && t.descent_rhs < 1e-12 && t.descent_ok);
    }
}

#[test]
fn descent_identities_and_nonnegativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let p = AdmmParams { max_iters: 50, eps: 0.0, ..AdmmParams::relax_default() };
    let e = engine(p);
    assert!((lambda_min_q(p.rho, p.rho_tilde) - 116.666_666_666_666_67).abs() < 1e-9);
    for _ in 0..30 {
        let c_o = random_symbol(&mut rng, e.plan());
        let out = e.solve(&c_o).unwrap();
        assert!(multiplier_identity_residual(&out.report.initial_state, p.rho_tilde) <= 1e-9);
        for t in &out.report.trace {
            assert!(t.descent_ok, "k={} lhs={} rhs={}", t.k, t.descent_lhs, t.descent_rhs);
            assert!(t.multiplier_residual <= 1e-9);
            assert!(t.lagrangian >= -1e-12);
            assert!(t.papr <= p.alpha * (1.0 + 2.0 * p.bisection.tol));
        }
    }
}

#[test]
fn zero_multiplier_start_breaks_first_descent_step() {
    // With y = 0 but u ≠ w the identity y1 = ρ̃(u − w) fails at the start,
    // and the quadratic margin is not guaranteed for the first transition.
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let p = AdmmParams { max_iters: 20, eps: 0.0, ..AdmmParams::relax_default() };
    let e = engine(p).with_multiplier_init(MultiplierInit::Zero);
    let mut first_fail = 0;
    for _ in 0..20 {
        let out = e.solve(&random_symbol(&mut rng, e.plan())).unwrap();
        if !out.report.trace[0].descent_ok {
            first_fail += 1;
        }
        assert!(out.report.trace[0].multiplier_residual <= 1e-9);
        assert!(out.report.trace[1..].iter().all(|t| t.descent_ok));
    }
    assert!(first_fail > 0);
}

#[test]
fn identities_after_one_iteration_from_zero_start() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let p = AdmmParams { max_iters: 1, ..AdmmParams::relax_default() };
    let e = engine(p).with_multiplier_init(MultiplierInit::Zero);
    let out = e.solve(&random_symbol(&mut rng, e.plan())).unwrap();
    assert!(multiplier_identity_residual(&out.report.final_state, p.rho_tilde) <= 1e-10);
}

#[test]
fn equal_u_w_means_zero_multipliers() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let e = engine(AdmmParams::relax_default());
    let c_o = random_symbol(&mut rng, e.plan());
    let s = e.initial_state(&c_o, &RelaxStart::Feasible(c_o.clone())).unwrap();
    assert_eq!(multiplier_identity_residual(&s, 100.0), 0.0);
    assert!(s.y1.iter().chain(s.y2.iter()).all(|v| v.norm() == 0.0));
}

#[test]
fn iteration_bound_small_thresholds() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let p = AdmmParams { max_iters: 3000, eps: 1e-16, ..AdmmParams::relax_default() };
    let e = engine(p);
    for _ in 0..5 {
        let out = e.solve(&random_symbol(&mut rng, e.plan())).unwrap();
        let mut last = 0;
        for eps in [1e-5, 1e-6, 1e-7, 1e-8] {
            let b = theorem3_bound(&out.report, eps, p.rho, p.rho_tilde);
            let r = b.actual_r.expect("first passage");
            assert!(b.pass && b.pass_shifted, "eps={eps}: r={r} bound={}", b.bound);
            assert!(r >= last);
            last = r;
        }
    }
}

#[test]
fn iteration_bound_above_first_residual() {
    // First passage happens at iteration 1; only r − 1 = 0 is controlled by the bound.
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let p = AdmmParams { max_iters: 2000, eps: 1e-16, ..AdmmParams::relax_default() };
    let e = engine(p);
    for _ in 0..5 {
        let out = e.solve(&random_symbol(&mut rng, e.plan())).unwrap();
        let first = out.report.trace[0].residual;
        for eps in [first * 1.01, first * 10.0, 1.0] {
            let b = theorem3_bound(&out.report, eps, p.rho, p.rho_tilde);
            assert_eq!(b.actual_r, Some(1));
            assert!(b.pass_shifted);
            assert!(b.bound > 0.0);
        }
    }
}

#[test]
fn feasible_start_gap_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let ofdm = Ofdm::new(64, 4).unwrap();
    let plan = CarrierPlan::standard(64).unwrap();
    let direct = AdmmParams { max_iters: 1000, eps: 1e-14, ..AdmmParams::direct_default() };
    let mut n_feasible = 0;
    for _ in 0..10 {
        let c_o = random_symbol(&mut rng, &plan);
        let fs = feasible_start(&ofdm, &plan, &direct, &c_o, 1e-6).unwrap();
        if !fs.feasible {
            continue;
        }
        n_feasible += 1;
        let p = AdmmParams { max_iters: 300, eps: 1e-14, rho: 90.0, rho_tilde: 30.0, ..AdmmParams::relax_default() };
        let e = AdmmRelax::new(ofdm.clone(), plan.clone(), p).unwrap();
        let out = e.solve_from(&c_o, &RelaxStart::Feasible(fs.c1.clone())).unwrap();
        let d1 = plan.data_dist_sqr(&fs.c1, &c_o);
        let dstar = plan.data_dist_sqr(&out.c, &c_o);
        let bound = (d1 - dstar) / p.rho_tilde;
        assert!(out.report.consensus_gap <= bound + 1e-12, "gap {} bound {bound}", out.report.consensus_gap);
        assert!(papr(&out.x).unwrap() <= p.alpha * (1.0 + 2.0 * p.bisection.tol));
        assert!(cvec::norm_sqr(&out.c) > 0.0);
    }
    assert!(n_feasible >= 5);
}
