use binomac::identities::{catalog, list, run_check, Certification, CheckConfig};
use binomac::{Error, FieldConfig, Interpolator, Variant};

#[test]
fn binom_qt_small_example() {
    let ip = Interpolator::new();
    let report = run_check("binom-qt", &CheckConfig::new(2, 2, 1), &ip, false).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.instances, 6);
    assert!(matches!(report.certification, Certification::Sampled { .. }));
}

#[test]
fn hecke_quadratic_symbolic() {
    let ip = Interpolator::new();
    let mut cfg = CheckConfig::new(3, 3, 1);
    cfg.qt = FieldConfig::symbolic(Variant::QT);
    let report = run_check("hecke-quadratic", &cfg, &ip, false).unwrap();
    assert!(report.passed());
    assert!(report.instances > 0);
}

#[test]
fn unknown_check_is_usage_error() {
    let ip = Interpolator::new();
    let err = run_check("nonsense", &CheckConfig::new(1, 1, 0), &ip, false).unwrap_err();
    assert!(matches!(err, Error::UsageError(_)));
}

#[test]
fn whole_catalog_small_sizes() {
    let ip = Interpolator::new();
    for n in [1, 2] {
        let cfg = CheckConfig::new(n, 2, 7);
        for spec in catalog() {
            let report = run_check(spec.id, &cfg, &ip, false).unwrap();
            assert!(report.passed(), "{} at n={n}: {:?}", spec.id, report.failures);
        }
    }
}

#[test]
fn symbolic_a_certification() {
    let ip = Interpolator::new();
    let mut cfg = CheckConfig::new(2, 2, 0);
    cfg.a_mode = binomac::identities::AMode::Symbolic;
    for id in ["eval-qt", "inva", "binom-qt", "discr-qt"] {
        let report = run_check(id, &cfg, &ip, false).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.failures);
        assert_eq!(report.certification, Certification::Symbolic);
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = CheckConfig::new(2, 3, 11);
    for id in ["discr-qt", "binom-qt", "sym-lemma"] {
        let a = run_check(id, &cfg, &Interpolator::new(), false).unwrap();
        let b = run_check(id, &cfg, &Interpolator::new(), false).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn bad_specialization_is_a_collision() {
    let ip = Interpolator::new();
    let mut cfg = CheckConfig::new(2, 2, 0);
    cfg.qt = FieldConfig::symbolic(Variant::QT)
        .assign(binomac::Gen::Q, num_rational::BigRational::from_integer(2.into()))
        .unwrap()
        .assign(binomac::Gen::T, num_rational::BigRational::new(1.into(), 2.into()))
        .unwrap();
    let err = run_check("eval-qt", &cfg, &ip, false).unwrap_err();
    assert!(matches!(err, Error::SpecializationCollision(ref m) if m.contains("coincide")), "{err}");
}

#[test]
fn listing_is_stable() {
    let all = list(None);
    assert_eq!(all.len(), catalog().len());
    assert!(all.len() >= 28);
    assert!(all.iter().zip(catalog()).all(|(e, s)| e.id == s.id));
}
