//! Cross-validation of the three independent triangle constructions and
//! the serialized forms.

use bmturan::arith::{rat, rat_int, Rat};
use bmturan::coeffs::{
    check_mixed_recurrences, corner, d_direct, row_direct_sum, row_double_sum, Triangle,
    TriangleMethod,
};
use proptest::prelude::*;

fn frozen_rows() -> Vec<Vec<Rat>> {
    vec![
        vec![rat_int(1)],
        vec![rat(3, 2), rat_int(1)],
        vec![rat(21, 8), rat(15, 4), rat(3, 2)],
        vec![rat(77, 16), rat(43, 4), rat(35, 4), rat(5, 2)],
    ]
}

#[test]
fn small_rows_match_ground_truth_for_every_method() {
    for method in [
        TriangleMethod::DirectSum,
        TriangleMethod::DoubleSum,
        TriangleMethod::Recurrence,
    ] {
        let tri = Triangle::build(method, 3);
        for (m, expected) in frozen_rows().iter().enumerate() {
            assert_eq!(tri.row(m).unwrap(), expected.as_slice(), "{method:?} m={m}");
        }
    }
}

#[test]
fn methods_agree_to_moderate_depth() {
    let depth = 80;
    let direct = Triangle::build(TriangleMethod::DirectSum, depth);
    let double = Triangle::build(TriangleMethod::DoubleSum, depth);
    let recur = Triangle::build(TriangleMethod::Recurrence, depth);
    for m in 0..=depth {
        assert_eq!(direct.row(m).unwrap(), double.row(m).unwrap(), "m = {m}");
        assert_eq!(direct.row(m).unwrap(), recur.row(m).unwrap(), "m = {m}");
        assert_eq!(direct.entry(m, m).unwrap(), &corner(m), "corner m = {m}");
    }
}

#[test]
fn row_builders_agree_without_triangle() {
    for m in 0..=25 {
        assert_eq!(row_direct_sum(m), row_double_sum(m), "m = {m}");
    }
}

#[test]
fn mixed_recurrences_hold_for_each_method() {
    for method in [
        TriangleMethod::DirectSum,
        TriangleMethod::DoubleSum,
        TriangleMethod::Recurrence,
    ] {
        let tri = Triangle::build(method, 30);
        let report = check_mixed_recurrences(&tri);
        assert!(report.passed(), "{method:?}: {report}");
    }
}

#[test]
fn ratio_examples() {
    let tri = Triangle::build(TriangleMethod::Recurrence, 5);
    assert_eq!(tri.vertical_ratio(2, 1).unwrap(), rat(43, 15));
    assert_eq!(tri.vertical_ratio(2, 2).unwrap(), rat(35, 6));
    assert_eq!(tri.vertical_ratio(3, 2).unwrap(), rat(219, 56));
    assert_eq!(tri.turan_ratio(2, 1).unwrap(), rat(25, 7));
}

#[test]
fn serialized_roundtrips_preserve_entries() {
    let tri = Triangle::build(TriangleMethod::DoubleSum, 12);
    let from_csv = Triangle::from_csv(&tri.to_csv()).unwrap();
    let from_json = Triangle::from_json(&tri.to_json()).unwrap();
    for m in 0..=12 {
        assert_eq!(tri.row(m).unwrap(), from_csv.row(m).unwrap());
        assert_eq!(tri.row(m).unwrap(), from_json.row(m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn direct_formula_matches_recurrence_entry(m in 0usize..=40, seed in 0u64..1000) {
        let l = (seed as usize) % (m + 1);
        let tri = Triangle::build(TriangleMethod::Recurrence, m);
        prop_assert_eq!(&d_direct(m, l).unwrap(), tri.entry(m, l).unwrap());
    }

    #[test]
    fn denominators_divide_four_to_the_m(m in 0usize..=30) {
        // every entry of row m is a dyadic rational with denominator
        // dividing 2^(2m)
        let row = row_direct_sum(m);
        let scale = rat_int(4).pow(m as i32);
        for d in &row {
            prop_assert!((d * &scale).is_integer());
        }
    }
}
