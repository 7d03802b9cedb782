//! The acceptance gate: one test per top-level claim of the library,
//! each ending in a single `ACCEPTANCE n: PASS` line.
//!
//! Everything here is decided in exact arithmetic with zero tolerance;
//! a single failing instance anywhere fails the gate.

use bmturan::arith::{rat, rat_int, Rat};
use bmturan::coeffs::{mixed_recurrence_instances, Triangle, TriangleMethod};
use bmturan::inequalities::{
    check_hot, check_log_concavity, check_ratio_lower_l, check_turan_ratio_bounds,
    ratio_lower_bound_l, TuranBound,
};
use bmturan::poly::certify::{certify_all_targets, PositivityVerdict};
use bmturan::poly::identities::verify_identity_suite;
use bmturan::{houli_verify, make_bm_bounds, Outcome};
use rand::{Rng, SeedableRng};
use std::cmp::Ordering;
use std::sync::OnceLock;

/// Shared recurrence triangle: rows 0..=301 so every vertical ratio and
/// coupling recurrence up to m = 300 is available.
fn tri() -> &'static Triangle {
    static TRI: OnceLock<Triangle> = OnceLock::new();
    TRI.get_or_init(|| Triangle::build(TriangleMethod::Recurrence, 301))
}

#[test]
fn acceptance_1_coefficient_ground_truth() {
    let frozen: Vec<Vec<Rat>> = vec![
        vec![rat_int(1)],
        vec![rat(3, 2), rat_int(1)],
        vec![rat(21, 8), rat(15, 4), rat(3, 2)],
        vec![rat(77, 16), rat(43, 4), rat(35, 4), rat(5, 2)],
    ];
    for (m, expected) in frozen.iter().enumerate() {
        assert_eq!(tri().row(m).unwrap(), expected.as_slice(), "row {m}");
    }
    let direct = Triangle::build(TriangleMethod::DirectSum, 200);
    let double = Triangle::build(TriangleMethod::DoubleSum, 200);
    for m in 0..=200 {
        assert_eq!(direct.row(m).unwrap(), double.row(m).unwrap(), "m = {m}");
        assert_eq!(direct.row(m).unwrap(), tri().row(m).unwrap(), "m = {m}");
    }
    println!("ACCEPTANCE 1: PASS (rows 0..=3 exact; three methods agree entry-by-entry to m = 200)");
}

#[test]
fn acceptance_2_anchored_ratio_above_radical_bound() {
    let ratio = tri().vertical_ratio(2, 1).unwrap();
    assert_eq!(ratio, rat(43, 15));
    let bound = ratio_lower_bound_l(2, 1);
    assert_eq!(bound.cmp_rational(&ratio), Ordering::Less);
    assert_eq!(bound.as_exact_rational(), Some(rat(17, 6)));
    println!("ACCEPTANCE 2: PASS (d_1(3)/d_1(2) = 43/15 strictly above the exact bound L(2,1) = 17/6)");
}

#[test]
fn acceptance_3_higher_order_turan_sweep() {
    let mut instances = 0;
    for m in 3..=300 {
        let report = check_hot(tri(), m).unwrap();
        assert!(report.passed(), "m = {m}: {report}");
        instances += report.count;
    }
    // sum of (m - 2) for m in 3..=300
    assert_eq!(instances, 298 * 299 / 2);
    println!("ACCEPTANCE 3: PASS (strict higher-order windows, 3 <= m <= 300, {instances} instances)");
}

#[test]
fn acceptance_4_vertical_ratio_bound_sweep() {
    let mut strict = 0;
    for m in 1..=300 {
        let report = check_ratio_lower_l(tri(), m).unwrap();
        assert!(report.passed(), "m = {m}: {report}");
        let equalities = report
            .instances
            .iter()
            .filter(|i| i.outcome == Outcome::ExpectedEquality)
            .count();
        assert_eq!(equalities, 2, "m = {m}: boundary columns must be equalities");
        strict += report.count - equalities;
    }
    println!("ACCEPTANCE 4: PASS (vertical ratio strictly above the radical bound at {strict} interior points; boundary equalities exact for 1 <= m <= 300)");
}

#[test]
fn acceptance_5_turan_ratio_bounds_and_chain() {
    for m in 2..=300 {
        for which in TuranBound::ALL {
            let report = check_turan_ratio_bounds(tri(), m, which).unwrap();
            assert!(report.passed(), "{} m = {m}: {report}", which.check_id());
        }
        for l in 1..m {
            let ratio = tri().turan_ratio(m, l).unwrap();
            let cg_lower = TuranBound::CgLower.value(m, l);
            let new_lower = TuranBound::NewLower.value(m, l);
            let sharper = TuranBound::SharperLower.value(m, l);
            let cg_upper = TuranBound::CgUpper.value(m, l);
            if l == 1 {
                // m + l and m + l^2 coincide at l = 1, so the first two
                // lower bounds are identical there for every m
                assert_eq!(cg_lower, new_lower, "m = {m}");
            } else {
                assert!(cg_lower < new_lower, "m = {m}, l = {l}");
            }
            assert!(new_lower < sharper, "m = {m}, l = {l}");
            assert!(sharper < ratio, "m = {m}, l = {l}");
            assert!(ratio < cg_upper, "m = {m}, l = {l}");
        }
    }
    println!("ACCEPTANCE 5: PASS (four ratio bounds strict for 2 <= m <= 300; chain ordered pointwise, lower bounds coinciding at l = 1)");
}

#[test]
fn acceptance_6_symbolic_certificates() {
    let identities = verify_identity_suite();
    assert_eq!(identities.len(), 10);
    for outcome in &identities {
        assert!(outcome.pass, "identity {} failed: {}", outcome.name, outcome.note);
    }
    let certificates = certify_all_targets();
    assert_eq!(certificates.len(), 8);
    for cert in &certificates {
        assert!(
            matches!(cert.verdict, PositivityVerdict::AllCoeffsNonneg),
            "positivity target {} not certified by coefficient inspection",
            cert.name
        );
    }
    println!(
        "ACCEPTANCE 6: PASS ({} polynomial identities exact; {} positivity certificates via shift substitution)",
        identities.len(),
        certificates.len()
    );
}

#[test]
fn acceptance_7_coupled_bound_criterion() {
    for m in 2..=300 {
        let bounds = make_bm_bounds(m);
        let report = houli_verify(tri().row(m).unwrap(), &bounds, 1).unwrap();
        assert!(report.passed(), "m = {m}: {report}");
        if m >= 3 {
            let direct = check_hot(tri(), m).unwrap();
            assert_eq!(report.passed(), direct.passed(), "m = {m}: conclusions differ");
        }
    }
    println!("ACCEPTANCE 7: PASS (criterion passes with N = 1 for 2 <= m <= 300 and agrees with the direct windows)");
}

#[test]
fn acceptance_8_fault_sensitivity() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xB0B0_5EED);
    for trial in 0..100 {
        let mp = rng.random_range(0..=300usize);
        let lp = rng.random_range(0..=mp);
        let bad = tri().perturbed(mp, lp).unwrap();
        // failing witnesses from the three detectors, on the rows whose
        // checks read the perturbed cell
        let mut failing: Vec<(&'static str, usize, i64)> = Vec::new();
        let mut rows = vec![mp];
        if mp >= 1 {
            rows.push(mp - 1);
        }
        for &r in &rows {
            for inst in mixed_recurrence_instances(&bad, r) {
                if inst.outcome.is_fail() {
                    failing.push(("mixed_rec", r, inst.l.unwrap()));
                }
            }
        }
        if mp >= 2 {
            for inst in check_log_concavity(&bad, mp).unwrap().instances {
                if inst.outcome.is_fail() {
                    failing.push(("log_concavity", mp, inst.l.unwrap()));
                }
            }
        }
        if mp >= 3 {
            for inst in check_hot(&bad, mp).unwrap().instances {
                if inst.outcome.is_fail() {
                    failing.push(("hot", mp, inst.l.unwrap()));
                }
            }
        }
        assert!(
            !failing.is_empty(),
            "trial {trial}: perturbation at ({mp}, {lp}) went undetected"
        );
        // at least one failing witness must read the perturbed cell
        let covered = failing.iter().any(|&(check, r, l)| {
            let cells: Vec<(usize, i64)> = match check {
                "mixed_rec" => vec![(r, l - 1), (r, l), (r, l + 1), (r + 1, l)],
                "log_concavity" => vec![(r, l - 1), (r, l), (r, l + 1)],
                _ => (l - 1..=l + 2).map(|i| (r, i)).collect(),
            };
            cells.contains(&(mp, lp as i64))
        });
        assert!(covered, "trial {trial}: no witness covers ({mp}, {lp})");
    }
    println!("ACCEPTANCE 8: PASS (100 random single-entry faults all detected with covering witnesses)");
}
