use airy_bessel::verifier::{
    run_suite, verify_airy_forms, verify_i_pair_ordering, verify_k13_kernel, verify_k23_kernel, verify_kernel_derivative,
    verify_recurrences, REL_ERR_FLOOR,
};
use airy_bessel::{GridSpec, IdentityId, IdentityReport, Order, QuadSpec, Spacing, SuiteConfig, Tolerance};

fn default_run() -> airy_bessel::SuiteVerdict {
    run_suite(&SuiteConfig::default()).unwrap()
}

fn check_invariants(r: &IdentityReport) {
    assert_eq!(r.abs_err, (r.lhs - r.rhs).abs());
    assert_eq!(r.rel_err, r.abs_err / r.rhs.abs().max(REL_ERR_FLOOR));
    assert_eq!(r.pass, r.abs_err <= r.atol + r.rtol * r.rhs.abs());
}

#[test]
fn default_suite_passes() {
    let v = default_run();
    for r in v.reports.iter().filter(|r| !r.pass) {
        eprintln!("{r:?}");
    }
    assert!(v.pass);
    assert_eq!(v.failed, 0);
    // 12 + 12 kernels, 3 × 10 ρ forms, 4 derivative points, 2 orders × 10 × 2 recurrences
    assert_eq!(v.total, 24 + 30 + 4 + 40);
    assert_eq!(v.summaries.len(), IdentityId::SUITE.len());
    v.reports.iter().for_each(check_invariants);
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let a = default_run();
    let b = default_run();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    for w in a.reports.windows(2) {
        let key = |r: &IdentityReport| (r.identity_id, r.order.unwrap_or(0.0), r.point);
        let (x, y) = (key(&w[0]), key(&w[1]));
        assert!(x.0 < y.0 || (x.0 == y.0 && (x.1 < y.1 || (x.1 == y.1 && x.2 < y.2))));
    }
}

#[test]
fn filtering_and_unattainable_tolerance() {
    let cfg = SuiteConfig::default().with_only(&[IdentityId::K13Kernel]);
    let v = run_suite(&cfg).unwrap();
    assert_eq!(v.total, 12);
    assert!(v.reports.iter().all(|r| r.identity_id == IdentityId::K13Kernel));
    assert!(v.pass);

    let v = run_suite(&cfg.with_tolerance(Tolerance::from_rtol(1e-15).unwrap())).unwrap();
    assert!(!v.pass);
    assert!(v.failed > 0);
}

#[test]
fn loosening_never_flips_pass_to_fail() {
    let tight = run_suite(&SuiteConfig::default().with_tolerance(Tolerance::new(1e-13, 1e-9).unwrap())).unwrap();
    let loose = default_run();
    let looser = run_suite(&SuiteConfig::default().with_tolerance(Tolerance::new(1e-8, 1e-4).unwrap())).unwrap();
    for ((t, l), ll) in tight.reports.iter().zip(&loose.reports).zip(&looser.reports) {
        assert_eq!((t.identity_id, t.point), (l.identity_id, l.point));
        assert!(!t.pass || l.pass);
        assert!(!l.pass || ll.pass);
    }
}

#[test]
fn kernel_examples() {
    let spec = QuadSpec::default();
    let tol = Tolerance::default();
    let g = GridSpec::new(1.0, 10.0, 2, Spacing::Linear).unwrap();
    let r = verify_k13_kernel(&g, &spec, tol).unwrap();
    assert!(r.iter().all(|r| r.pass));
    assert!(r[0].rel_err <= 1e-6);
    let g = GridSpec::linear(0.2, 1.0, 2).unwrap();
    assert!(verify_k23_kernel(&g, &spec, tol).unwrap().iter().all(|r| r.pass));
    assert!(GridSpec::linear(1.0, 2.0, 1).is_err());
}

#[test]
fn airy_forms_and_sign_resolution() {
    let spec = QuadSpec::default();
    let tol = Tolerance::default();
    let g = GridSpec::linear(0.5, 3.0, 2).unwrap();
    let r = verify_airy_forms(&g, &spec, tol).unwrap();
    assert_eq!(r.len(), 6);
    assert!(r.iter().all(|r| r.pass));
    let at3 = r.iter().find(|r| r.identity_id == IdentityId::IPairKForm && r.point == 3.0).unwrap();
    assert!(at3.rel_err <= 1e-13);

    for &rho in &[0.5, 1.0, 3.0, 8.0] {
        let (paper, reversed) = verify_i_pair_ordering(rho, &spec, tol).unwrap();
        assert!(paper.pass && paper.rhs > 0.0);
        assert!(!reversed.pass);
        assert!(reversed.rhs < 0.0);
        assert!((reversed.rhs + paper.rhs).abs() == 0.0);
    }
}

#[test]
fn kernel_derivative() {
    let spec = QuadSpec::default();
    for &xi in &[0.5, 1.0, 2.0, 4.0] {
        let r = verify_kernel_derivative(xi, &spec, Tolerance::default());
        assert!(r.pass, "{r:?}");
        assert!(r.rel_err <= 1e-4);
    }
}

#[test]
fn recurrences() {
    let g = GridSpec::logarithmic(0.2, 8.0, 6).unwrap();
    let tol = Tolerance::default();
    let third = verify_recurrences(Order::one_third(), &g, tol).unwrap();
    assert!(third.iter().all(|r| r.pass));
    // K_ν = K_{−ν}: the difference relation for −1/3 is the 1/3 one with sides negated
    let neg = verify_recurrences(Order::one_third().neg(), &g, tol).unwrap();
    for (a, b) in third.iter().zip(&neg) {
        if a.identity_id == IdentityId::RecurrenceDifference {
            assert_eq!(a.rel_err, b.rel_err);
            assert_eq!(a.lhs, -b.lhs);
            assert_eq!(a.rhs, -b.rhs);
        }
    }
    let half = verify_recurrences(Order::new(0.5).unwrap(), &GridSpec::linear(1.0, 2.0, 2).unwrap(), tol).unwrap();
    for r in &half {
        assert!(r.rel_err <= 1e-11, "{r:?}");
    }
    assert!(verify_recurrences(Order::new(1.0).unwrap(), &g, tol).is_err());
}

#[test]
fn json_and_csv_round_trip() {
    let v = run_suite(&SuiteConfig::default().with_only(&[IdentityId::K23Kernel, IdentityId::RecurrenceDifference])).unwrap();
    let json = serde_json::to_string(&v).unwrap();
    let back: airy_bessel::SuiteVerdict = serde_json::from_str(&json).unwrap();
    assert_eq!(back, v);

    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &v.reports {
        w.serialize(r).unwrap();
    }
    let bytes = w.into_inner().unwrap();
    let mut rd = csv::Reader::from_reader(bytes.as_slice());
    let parsed: Vec<IdentityReport> = rd.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(parsed, v.reports);
}

#[test]
fn failed_evaluation_is_data() {
    let spec = QuadSpec::default().with_max_half_periods(8);
    let g = GridSpec::linear(1.0, 2.0, 2).unwrap();
    let r = verify_k13_kernel(&g, &spec, Tolerance::default()).unwrap();
    assert!(r.iter().all(|r| !r.pass && r.note.is_some() && r.lhs.is_nan()));
    let json = serde_json::to_string(&r).unwrap();
    let back: Vec<IdentityReport> = serde_json::from_str(&json).unwrap();
    assert!(back[0].lhs.is_nan());
    assert_eq!(back[0].note, r[0].note);
}
