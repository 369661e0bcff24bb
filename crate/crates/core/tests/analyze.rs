use orbiquot::classify::{analyze, pipeline_samples, Config, Status};
use orbiquot::liealg::{circle_weights_spec, Factor, FactorKind, Field, GroupSpec, Letter};
use orbiquot::polarity::Verdict;
use orbiquot::LieGroupRep;

fn quick() -> Config {
    Config { samples: 40, ..Config::default() }
}

#[test]
fn su3_on_two_copies_of_c3() {
    let spec = GroupSpec::new(vec![Factor::new(FactorKind::Su, 3)])
        .summand(Field::Complex, vec![Letter::standard(0)])
        .doubled();
    let r = analyze(&spec, &quick()).unwrap();
    assert_eq!(r.computed.cohomogeneity, 4);
    assert_eq!(r.computed.polar.done().unwrap().verdict, Verdict::NonPolar);
    assert_eq!(r.computed.inf_polar.done().unwrap().verdict.verdict, Verdict::Polar);
    let k = r.computed.curvature.done().unwrap();
    assert!((k.min - 4.0).abs() < 1e-6 && (k.max - 4.0).abs() < 1e-6, "{k:?}");
    assert_eq!(r.status, Status::Pass);
}

/// The Hopf action of the diagonal circle on C^3 has quotient CP^2 with the
/// Fubini-Study metric of holomorphic curvature 4, where the sectional
/// curvature of a plane spanned by orthonormal `x, y` is `1 + 3 <ix, y>^2`.
#[test]
fn diagonal_circle_on_c3_gives_fubini_study() {
    let spec = circle_weights_spec(&[1, 1, 1]).unwrap();
    let r = analyze(&spec, &quick()).unwrap();
    assert_eq!(r.computed.quotient_dim, 4);
    assert!(r.computed.strata.done().unwrap().iter().all(|w| w.stratum_codim == 0), "the action is free");
    let rep = LieGroupRep::from_spec(&spec).unwrap();
    let samples = pipeline_samples(&rep, &quick()).unwrap();
    let mut lowest: f64 = 4.0;
    for s in &samples {
        // i acts on interleaved (re, im) pairs.
        let ix: Vec<f64> = s.x.chunks(2).flat_map(|c| [-c[1], c[0]]).collect();
        let c: f64 = ix.iter().zip(&s.y).map(|(a, b)| a * b).sum();
        assert!((s.curvature - (1.0 + 3.0 * c * c)).abs() < 1e-9, "{} vs {}", s.curvature, 1.0 + 3.0 * c * c);
        lowest = lowest.min(s.curvature);
    }
    assert!(lowest < 3.9, "curvature is not constant: min {lowest}");
}

#[test]
fn sp1_on_h2_is_almost_free() {
    let spec = GroupSpec::new(vec![Factor::new(FactorKind::Sp, 1)])
        .summand(Field::Quaternionic, vec![Letter::standard(0)])
        .doubled();
    let r = analyze(&spec, &quick()).unwrap();
    assert_eq!(r.computed.quotient_dim, 4);
    assert!(r.computed.strata.done().unwrap().iter().all(|w| w.isotropy_dim == 0));
    assert!(!r.computed.boundary);
}

#[test]
fn construction_errors_name_the_summand() {
    let spec = GroupSpec::new(vec![Factor::new(FactorKind::Su, 3)]).summand(Field::Complex, vec![Letter::standard(1)]);
    let err = analyze(&spec, &quick()).unwrap_err().to_string();
    assert!(err.contains("summand"), "{err}");
}

#[test]
fn loose_rank_tolerance_reports_instead_of_crashing() {
    let config = Config { tol_rank: 1e-2, samples: 20, ..Config::default() };
    for id in ["T2-row5a", "polar-control-torus2", "T1-sp2u1"] {
        let r = orbiquot::classify::verify_entry(id, &config).unwrap();
        assert!(matches!(r.status, Status::Pass | Status::Fail | Status::Inconclusive));
    }
}
