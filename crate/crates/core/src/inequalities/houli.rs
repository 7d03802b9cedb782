//! The generic coupled-bound criterion for higher-order Turán
//! inequalities, plus its concrete bound functions for triangle rows.
//!
//! Given a strictly positive sequence `a_0, ..., a_M` and two bound
//! functions `g`, `h`, the criterion requires, for every `n` in the
//! checked window,
//!
//! * condition (i): `g(n) < a_{n-1} a_{n+1} / a_n^2 < h(n)` strictly, and
//! * condition (ii): `d(x, y) > 0` for the four combinations
//!   `x ∈ {g(n), h(n)}`, `y ∈ {g(n+1), h(n+1)}`, where
//!   `d(x, y) = 4(1-x)(1-y) - (1-xy)^2`.
//!
//! When both hold for all `n >= N`, the sequence satisfies the
//! higher-order Turán inequalities strictly from index `N + 1` on — and
//! in fact from `N` on. The engine is generic over the bounds; the
//! triangle-row instance uses
//! `g(n) = (m-n)n / ((m-n+1)(n+1))` and `h(n) = g(n)(m+n^2+1)/(m+n^2)`,
//! evaluated exactly from the registry transcriptions.

use super::InequalitiesError;
use crate::arith::{fmt_frac, rat_int, Rat};
use crate::poly::{point_mn, registry as reg};
use crate::report::{CheckReport, Instance, Outcome};
use num_traits::{One, Signed};

/// `d(x, y) = 4(1-x)(1-y) - (1-xy)^2`, exactly.
pub fn houli_d(x: &Rat, y: &Rat) -> Rat {
    let one = Rat::one();
    let w = &one - &(x * y);
    rat_int(4) * (&one - x) * (&one - y) - &w * &w
}

/// A pair of exact bound evaluators with the inclusive interval on which
/// `0 < g(n) < h(n)` is asserted (and re-checked at run time).
pub struct BoundFns {
    g: Box<dyn Fn(i64) -> Rat + Send + Sync>,
    h: Box<dyn Fn(i64) -> Rat + Send + Sync>,
    valid_range: (i64, i64),
}

impl BoundFns {
    pub fn new(
        g: Box<dyn Fn(i64) -> Rat + Send + Sync>,
        h: Box<dyn Fn(i64) -> Rat + Send + Sync>,
        valid_range: (i64, i64),
    ) -> Self {
        BoundFns { g, h, valid_range }
    }

    pub fn g(&self, n: i64) -> Rat {
        (self.g)(n)
    }

    pub fn h(&self, n: i64) -> Rat {
        (self.h)(n)
    }

    pub fn valid_range(&self) -> (i64, i64) {
        self.valid_range
    }
}

/// The bound functions for row `m` of the triangle:
/// `g(n) = (m-n)n / ((m-n+1)(n+1))`, `h(n) = g(n)(m+n^2+1)/(m+n^2)`.
///
/// Both evaluators are defined for `0 <= n <= m` (they vanish at the
/// endpoints); the strict ordering `0 < g(n) < h(n)` holds on
/// `1 <= n <= m-1`, which is the advertised valid range.
pub fn make_bm_bounds(m: usize) -> BoundFns {
    debug_assert!(m >= 2, "bound functions need m >= 2");
    let (g_num, g_den) = (reg::g_num(), reg::g_den());
    let (h_num, h_den) = (reg::h_num(), reg::h_den());
    let mi = m as i64;
    let g = move |n: i64| {
        let p = point_mn(mi, n);
        g_num.eval(&p) / g_den.eval(&p)
    };
    let h = move |n: i64| {
        let p = point_mn(mi, n);
        h_num.eval(&p) / h_den.eval(&p)
    };
    BoundFns::new(Box::new(g), Box::new(h), (1, mi - 1))
}

/// Run the criterion on `seq` with the window starting at `n_start`.
///
/// Checks condition (i) and condition (ii) for every
/// `n_start <= n <= len-2` (the largest `n` with `a_{n+1}` defined; the
/// bounds are evaluated up to `n = len-1`), re-checks `0 < g < h` on the
/// bounds' valid range, and appends a sequence-level conclusion instance
/// (`l = null`) stating the resulting strict higher-order Turán window.
///
/// Instances carry `m = seq.len() - 1`, which for a triangle row is its
/// row index.
pub fn houli_verify(
    seq: &[Rat],
    bounds: &BoundFns,
    n_start: i64,
) -> Result<CheckReport, InequalitiesError> {
    for (index, value) in seq.iter().enumerate() {
        if !value.is_positive() {
            return Err(InequalitiesError::NonpositiveElement {
                index,
                value: fmt_frac(value),
            });
        }
    }
    let m_label = seq.len().saturating_sub(1);
    let last = seq.len() as i64 - 2;
    let mut instances = Vec::new();
    for n in n_start..=last {
        let gv = bounds.g(n);
        let hv = bounds.h(n);
        let (vlo, vhi) = bounds.valid_range();
        if n >= vlo && n <= vhi && !(gv.is_positive() && gv < hv) {
            instances.push(Instance::fail(
                m_label,
                n,
                gv.clone(),
                hv.clone(),
                "bound functions must satisfy 0 < g(n) < h(n)",
            ));
        }
        // condition (i): g(n) < a_{n-1} a_{n+1} / a_n^2 < h(n)
        let ratio =
            &seq[(n - 1) as usize] * &seq[(n + 1) as usize] / (&seq[n as usize] * &seq[n as usize]);
        instances.push(if ratio > gv {
            Instance::new(
                m_label,
                Some(n),
                Outcome::StrictPass,
                ratio.clone(),
                gv,
                "condition (i), lower part",
            )
        } else {
            Instance::fail(
                m_label,
                n,
                ratio.clone(),
                gv,
                "condition (i) fails: reciprocal ratio must exceed g(n)",
            )
        });
        instances.push(if ratio < hv {
            Instance::new(
                m_label,
                Some(n),
                Outcome::StrictPass,
                ratio.clone(),
                hv,
                "condition (i), upper part",
            )
        } else {
            Instance::fail(
                m_label,
                n,
                ratio,
                hv,
                "condition (i) fails: reciprocal ratio must stay below h(n)",
            )
        });
        // condition (ii): the four quadratic-form values must be positive
        let pairs = [
            ("d(g(n), g(n+1))", bounds.g(n), bounds.g(n + 1)),
            ("d(g(n), h(n+1))", bounds.g(n), bounds.h(n + 1)),
            ("d(h(n), g(n+1))", bounds.h(n), bounds.g(n + 1)),
            ("d(h(n), h(n+1))", bounds.h(n), bounds.h(n + 1)),
        ];
        for (label, x, y) in pairs {
            let value = houli_d(&x, &y);
            instances.push(if value.is_positive() {
                Instance::new(
                    m_label,
                    Some(n),
                    Outcome::StrictPass,
                    value,
                    rat_int(0),
                    format!("condition (ii), {label}"),
                )
            } else {
                Instance::fail(
                    m_label,
                    n,
                    value,
                    rat_int(0),
                    format!("condition (ii) fails: {label} must be positive"),
                )
            });
        }
    }
    let failures = instances.iter().filter(|i| i.outcome.is_fail()).count();
    let checked = instances.len();
    let window_hi = seq.len() as i64 - 3;
    let conclusion = if failures == 0 {
        let window = if window_hi >= n_start {
            format!(
                "higher-order Turan inequalities hold strictly for windows n in [{}, {}] \
                 (directly [{}, {}]; the criterion extends one index lower)",
                n_start,
                window_hi,
                n_start + 1,
                window_hi
            )
        } else {
            "window empty: sequence too short for any higher-order Turan instance".to_string()
        };
        Instance::new(
            m_label,
            None,
            Outcome::StrictPass,
            rat_int(checked as i64),
            rat_int(0),
            format!("criterion satisfied for n in [{n_start}, {last}]; {window}"),
        )
    } else {
        Instance::new(
            m_label,
            None,
            Outcome::Fail,
            rat_int(checked as i64),
            rat_int(failures as i64),
            "criterion not established: condition failures above",
        )
    };
    instances.push(conclusion);
    Ok(CheckReport::from_instances(
        "houli",
        format!("n in {n_start}..={last}"),
        instances,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::coeffs::{row_direct_sum, Triangle, TriangleMethod};
    use proptest::prelude::*;

    #[test]
    fn d_examples() {
        assert_eq!(houli_d(&rat_int(0), &rat_int(0)), rat_int(3));
        assert_eq!(houli_d(&rat_int(1), &rat_int(1)), rat_int(0));
        assert_eq!(houli_d(&rat(1, 4), &rat(1, 4)), rat(351, 256));
    }

    #[test]
    fn bm_bounds_examples() {
        let b2 = make_bm_bounds(2);
        assert_eq!(b2.g(1), rat(1, 4));
        assert_eq!(b2.h(1), rat(1, 3));
        assert_eq!(b2.valid_range(), (1, 1));
        // both vanish at the right endpoint
        assert_eq!(b2.g(2), rat_int(0));
        assert_eq!(b2.h(2), rat_int(0));
        let b3 = make_bm_bounds(3);
        assert_eq!(b3.g(2), rat(1, 3));
        assert_eq!(b3.h(2), rat(8, 21));
    }

    #[test]
    fn row_two_passes_with_reciprocal_ratio_between_bounds() {
        // reciprocal Turan ratio of row 2 at n = 1 is 7/25, strictly
        // between g(1) = 1/4 and h(1) = 1/3
        let row = row_direct_sum(2);
        let ratio = &row[0] * &row[2] / (&row[1] * &row[1]);
        assert_eq!(ratio, rat(7, 25));
        let report = houli_verify(&row, &make_bm_bounds(2), 1).unwrap();
        assert!(report.passed(), "{report}");
        // n = 1 only: bound sanity implicit, 2 ratio conditions + 4
        // quadratic-form conditions + conclusion
        assert_eq!(report.count, 7);
    }

    #[test]
    fn rows_up_to_forty_pass_and_conclusion_names_window() {
        let tri = Triangle::build(TriangleMethod::Recurrence, 40);
        for m in 2..=40 {
            let report = houli_verify(tri.row(m).unwrap(), &make_bm_bounds(m), 1).unwrap();
            assert!(report.passed(), "m = {m}: {report}");
            let conclusion = report.instances.last().unwrap();
            assert_eq!(conclusion.l, None);
            if m >= 3 {
                assert!(
                    conclusion.note.contains(&format!("[1, {}]", m - 2)),
                    "m = {m}: {}",
                    conclusion.note
                );
            }
        }
    }

    #[test]
    fn nonpositive_element_is_an_error() {
        let seq = vec![rat_int(1), rat_int(0), rat_int(1)];
        let err = houli_verify(&seq, &make_bm_bounds(2), 1).unwrap_err();
        assert!(err.to_string().contains("index 1"));
    }

    #[test]
    fn degenerate_bounds_fail_condition_i_with_witness() {
        // g == h leaves no room for the strict sandwich
        let g = Box::new(|_: i64| rat(7, 25));
        let h = Box::new(|_: i64| rat(7, 25));
        let row = row_direct_sum(2);
        let report = houli_verify(&row, &BoundFns::new(g, h, (1, 1)), 1).unwrap();
        assert!(!report.passed());
        let failing: Vec<_> = report.failures().collect();
        assert!(failing
            .iter()
            .any(|i| i.note.contains("0 < g(n) < h(n)")));
        assert!(failing.iter().any(|i| i.note.contains("condition (i)")));
        // the conclusion is also a failure and counts the conditions
        assert!(report.instances.last().unwrap().outcome.is_fail());
    }

    proptest! {
        /// The quadratic form is symmetric in its two arguments.
        #[test]
        fn d_is_symmetric(
            xn in -20i64..20, xd in 1i64..20, yn in -20i64..20, yd in 1i64..20
        ) {
            let x = rat(xn, xd);
            let y = rat(yn, yd);
            prop_assert_eq!(houli_d(&x, &y), houli_d(&y, &x));
        }
    }
}
