//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::FRAC_PI_4;
use std::time::Instant;

use orbiquot::classify::{a_tensor_error, lookup, registry, verify_entry, verify_tables, Config, Source, Status};
use orbiquot::coxeter::{check_c3, check_goodness, fixtures, Goodness};
use orbiquot::geometry::{
    curvature_samples, group_element, killing_component_norms, orbit_distance, DEFAULT_RESTARTS,
};
use orbiquot::isotropy::{cohomogeneity, lrs_reduction, DEFAULT_SAMPLES};
use orbiquot::liealg::{build_classical, build_g2, build_spin, doubling, Factor, FactorKind, Field, GroupSpec, Letter};
use orbiquot::polarity::{is_infinitesimally_polar, is_polar, Verdict, DEFAULT_TEST_POINTS};
use orbiquot::isotropy::SearchOptions;
use orbiquot::{LieGroupRep, Mat, Tolerances, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn entry_rep(id: &str) -> LieGroupRep {
    LieGroupRep::from_spec(&lookup(id).unwrap_or_else(|| panic!("no entry {id}")).spec).expect("registry spec builds")
}

fn ids(source: Source) -> Vec<String> {
    registry().into_iter().filter(|e| e.source == source).map(|e| e.id).collect()
}

fn table_rows() -> Vec<String> {
    [Source::Table1, Source::Table2, Source::Table3].into_iter().flat_map(ids).collect()
}

/// Closed-form dimension of a simple or abelian factor.
fn closed_form_dim(f: &Factor) -> usize {
    let n = f.n;
    match f.kind {
        FactorKind::Torus => n,
        FactorKind::So => n * (n - 1) / 2,
        FactorKind::Su => n * n - 1,
        FactorKind::U => n * n,
        FactorKind::Sp => n * (2 * n + 1),
        FactorKind::Spin7 => 21,
        FactorKind::Spin9 => 36,
        FactorKind::G2 => 14,
    }
}

fn factor_rep(f: &Factor) -> LieGroupRep {
    match f.kind {
        FactorKind::Torus => {
            let spec = (0..f.n).fold(GroupSpec::new(vec![f.clone()]), |s, k| {
                let mut w = vec![0; f.n];
                w[k] = 1;
                s.summand(Field::Complex, vec![Letter::weighted(0, w)])
            });
            LieGroupRep::from_spec(&spec).unwrap()
        }
        FactorKind::Spin7 => build_spin(7).unwrap(),
        FactorKind::Spin9 => build_spin(9).unwrap(),
        FactorKind::G2 => build_g2().unwrap(),
        kind => build_classical(kind, f.n).unwrap(),
    }
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut slowest: f64 = 0.0;
    for e in registry() {
        for f in &e.spec.factors {
            let start = Instant::now();
            let rep = factor_rep(f);
            slowest = slowest.max(start.elapsed().as_secs_f64());
            if rep.algebra_dim() != closed_form_dim(f) {
                return outcome(false, format!("{:?}({}): {} generators, expected {}", f.kind, f.n, rep.algebra_dim(), closed_form_dim(f)));
            }
            worst = worst.max(rep.closure_residual());
        }
        let rep = entry_rep(&e.id);
        let total: usize = e.spec.factors.iter().map(closed_form_dim).sum();
        if rep.algebra_dim() != total {
            return outcome(false, format!("{}: {} generators, expected {total}", e.id, rep.algebra_dim()));
        }
        worst = worst.max(rep.closure_residual());
    }
    outcome(worst < 1e-10 && slowest < 1.0, format!("closure residual max {worst:.2e}, slowest build {slowest:.3}s"))
}

fn criterion_2() -> Outcome {
    let rows = [
        "T2-row1a", "T2-row1b", "T2-row1c", "T2-row2", "T2-row3", "T2-row4a", "T2-row4b", "T2-row5a", "T2-row5b", "T2-row6",
        "T2-row7", "T2-row8", "T2-row9a", "T2-row9b", "T2-row9c", "T2-row10", "T3-row11", "T3-row12", "T3-row13a",
        "T3-row13b", "T3-row13c", "T3-row14",
    ];
    let expected = [3, 3, 3, 4, 5, 4, 4, 3, 3, 6, 5, 4, 3, 3, 3, 4, 3, 3, 3, 3, 3, 3];
    let t = Tolerances::default();
    let mut computed = Vec::new();
    let mut slowest: f64 = 0.0;
    for id in rows {
        let start = Instant::now();
        computed.push(cohomogeneity(&entry_rep(id), 0, DEFAULT_SAMPLES, &t));
        slowest = slowest.max(start.elapsed().as_secs_f64());
    }
    outcome(computed == expected && slowest < 1.0, format!("{computed:?}, slowest {slowest:.3}s"))
}

fn criterion_3() -> Outcome {
    let t = Tolerances::default();
    let mut lines = Vec::new();
    let mut pass = true;
    for id in ids(Source::Table1) {
        let rep = entry_rep(&id);
        let samples = curvature_samples(&rep, 0, 200, &t).expect("curvature samples");
        let (lo, hi) = samples.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), s| (a.min(s.curvature), b.max(s.curvature)));
        let fd = a_tensor_error(&rep, 0, &t).expect("finite differences");
        let ok = samples.len() == 200 && (lo - 4.0).abs() <= 1e-6 && (hi - 4.0).abs() <= 1e-6 && fd <= 1e-3;
        pass &= ok;
        lines.push(format!("{id} [{lo:.9}, {hi:.9}] fd {fd:.1e}"));
    }
    outcome(pass, lines.join("; "))
}

fn criterion_4() -> Outcome {
    let t = Tolerances::default();
    let mut pass = true;
    let mut worst_control: f64 = 0.0;
    for id in ids(Source::Control).into_iter().filter(|id| id.starts_with("polar-control")) {
        let v = is_polar(&entry_rep(&id), 0, DEFAULT_TEST_POINTS, &t).unwrap();
        pass &= v.verdict == Verdict::Polar && v.residual < 1e-8;
        worst_control = worst_control.max(v.residual);
    }
    let mut least_row = f64::INFINITY;
    for id in table_rows() {
        let v = is_polar(&entry_rep(&id), 0, DEFAULT_TEST_POINTS, &t).unwrap();
        pass &= v.verdict == Verdict::NonPolar && v.residual > 1e-2;
        least_row = least_row.min(v.residual);
    }
    outcome(pass, format!("controls residual max {worst_control:.1e}; rows residual min {least_row:.3}"))
}

fn criterion_5() -> Outcome {
    let t = Tolerances::default();
    let opts = SearchOptions::default();
    let mut failing = Vec::new();
    for id in table_rows() {
        let r = is_infinitesimally_polar(&entry_rep(&id), &opts, &t).unwrap();
        if r.verdict.verdict != Verdict::Polar {
            failing.push(id);
        }
    }
    let torus = GroupSpec::new(vec![Factor::new(FactorKind::Torus, 2)])
        .summand(Field::Complex, vec![Letter::weighted(0, vec![1, 0])])
        .summand(Field::Complex, vec![Letter::weighted(0, vec![0, 1])])
        .summand(Field::Complex, vec![Letter::weighted(0, vec![-1, -1])]);
    let r = is_infinitesimally_polar(&LieGroupRep::from_spec(&torus).unwrap(), &opts, &t).unwrap();
    let torus_ok = r.verdict.verdict == Verdict::NonPolar;
    outcome(
        failing.is_empty() && torus_ok,
        format!("{} rows inf-polar, failing {failing:?}; torus verdict {:?}", table_rows().len() - failing.len(), r.verdict.verdict),
    )
}

/// `diag(cos r, sin r)` in the doubling of `Sp(2)` on `H^2`.
fn gamma(r: f64) -> Vector {
    let mut p = Vector::zeros(16);
    p[0] = r.cos();
    p[12] = r.sin();
    p
}

fn criterion_6() -> Outcome {
    let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
    let t = Tolerances::default();
    let mut xi = Mat::zeros(16, 16);
    for k in 0..8 {
        xi[(k, 8 + k)] = -1.0;
        xi[(8 + k, k)] = 1.0;
    }
    let mut worst: f64 = 0.0;
    for k in 1..=7 {
        let r = 0.1 * k as f64;
        let s = killing_component_norms(&rep, &xi, &gamma(r), &t).unwrap();
        worst = worst.max((s.vertical - (2.0 * r).sin()).abs()).max((s.horizontal - (2.0 * r).cos()).abs());
    }
    let d = orbit_distance(&rep, &gamma(0.0), &gamma(FRAC_PI_4), 0, DEFAULT_RESTARTS).distance;
    outcome(worst < 1e-9 && (d - FRAC_PI_4).abs() < 1e-3, format!("profile error {worst:.1e}; distance {d:.9}"))
}

fn criterion_7() -> Outcome {
    let t = Tolerances::default();
    let red = lrs_reduction(&entry_rep("T1-spin9"), 0, &t).unwrap();
    let got = (red.subalgebra_dim, red.fixed_basis.ncols(), red.rep.algebra_dim(), cohomogeneity(&red.rep, 0, DEFAULT_SAMPLES, &t));
    outcome(got == (8, 8, 4, 4), format!("isotropy {}, fixed {}, reduced algebra {}, reduced cohomogeneity {}", got.0, got.1, got.2, got.3))
}

fn criterion_8() -> Outcome {
    let (tear, _) = fixtures::half_tear_drop();
    let (square, _) = fixtures::square_chamber();
    let tear_v = check_goodness(&tear).unwrap().verdict;
    let square_v = check_goodness(&square).unwrap().verdict;
    let mut meta = true;
    for (_, data, faces) in fixtures::all() {
        let g = check_goodness(&data).unwrap();
        if check_c3(&faces).unwrap().holds {
            meta &= g.c1 && g.c2;
        }
    }
    outcome(
        tear_v == Goodness::Bad && square_v == Goodness::Good && meta,
        format!("half tear-drop {tear_v:?}, square {square_v:?}, C3 => C1 and C2 {meta}"),
    )
}

fn criterion_9() -> Outcome {
    let config = Config::default();
    let mut notes = Vec::new();
    let mut pass = true;

    // Finite differences and the O'Neill lower bound, from the registry run.
    let start = Instant::now();
    let summary = verify_tables(&config, None).unwrap();
    let (mut fd_worst, mut k_min, mut entries) = (0.0f64, f64::INFINITY, 0);
    for r in &summary.reports {
        if let Some(e) = r.computed.a_tensor_error.done() {
            fd_worst = fd_worst.max(*e);
            entries += 1;
        }
        if let Some(s) = r.computed.curvature.done() {
            k_min = k_min.min(s.min);
        }
    }
    pass &= fd_worst <= 1e-6 && k_min >= 1.0 - 1e-9;
    notes.push(format!("A-tensor rel. error max {fd_worst:.1e} over {entries} entries x 50 configs; K min {k_min:.4}"));
    pass &= summary.status == Status::Pass;
    notes.push(format!(
        "registry {} pass / {} fail / {} inconclusive in {:.0}s",
        summary.passed,
        summary.failed,
        summary.inconclusive,
        start.elapsed().as_secs_f64()
    ));

    // Symmetry and vanishing on orbits.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut asym, mut on_orbit) = (0.0f64, 0.0f64);
    for id in ["hopf", "T3-row12", "T2-row1b", "T1-su3", "T2-row9c"] {
        let rep = entry_rep(id);
        let n = rep.ambient_dim();
        for _ in 0..3 {
            let p = Vector::from_fn(n, |_, _| rng.random_range(-1.0..1.0)).normalize();
            let q = Vector::from_fn(n, |_, _| rng.random_range(-1.0..1.0)).normalize();
            let dpq = orbit_distance(&rep, &p, &q, 0, DEFAULT_RESTARTS).distance;
            let dqp = orbit_distance(&rep, &q, &p, 0, DEFAULT_RESTARTS).distance;
            asym = asym.max((dpq - dqp).abs());
            let coeffs: Vec<f64> = (0..rep.algebra_dim()).map(|_| rng.random_range(-3.0..3.0)).collect();
            let gp = group_element(&rep, &coeffs) * &p;
            on_orbit = on_orbit.max(orbit_distance(&rep, &p, &gp, 0, DEFAULT_RESTARTS).distance);
        }
    }
    pass &= asym < 1e-6 && on_orbit < 1e-6;
    notes.push(format!("distance asymmetry {asym:.1e}, on-orbit distance {on_orbit:.1e}"));

    // Byte-identical reruns.
    let mut identical = true;
    for id in ["hopf", "T3-row12", "T1-su3"] {
        let a = verify_entry(id, &config).unwrap().to_json().unwrap();
        let b = verify_entry(id, &config).unwrap().to_json().unwrap();
        identical &= a == b;
    }
    pass &= identical;
    notes.push(format!("reports byte-identical {identical}"));
    outcome(pass, notes.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("algebra construction", criterion_1),
        ("cohomogeneity table", criterion_2),
        ("curvature 4 on Table 1", criterion_3),
        ("polar controls", criterion_4),
        ("infinitesimal polarity", criterion_5),
        ("Killing profile and distance", criterion_6),
        ("Spin(9) reduction chain", criterion_7),
        ("Coxeter checker", criterion_8),
        ("property suite", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "{} {:>2} {name}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("INFO 10 completeness of the classification: not checked; the witness-based suites above stand in for it");
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
