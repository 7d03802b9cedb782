//! The registered row checks: each one verifies a single named inequality
//! family over one triangle row and reports exact witnesses.

use super::houli::{houli_verify, make_bm_bounds};
use super::{InequalitiesError, RowCheck};
use crate::arith::{rat_int, QuadraticSurd, Rat};
use crate::coeffs::{factorial, mixed_recurrence_instances, Triangle};
use crate::poly::{point_ml, registry as reg, MultiPoly};
use crate::report::{CheckReport, Instance, Outcome, Value};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::sync::OnceLock;

// ---- bound constructors -------------------------------------------------

struct LBoundPolys {
    num_rat: MultiPoly,
    num_surd: MultiPoly,
    den: MultiPoly,
    radicand: MultiPoly,
}

static L_POLYS: OnceLock<LBoundPolys> = OnceLock::new();

/// The radical lower bound `L(m, l)` for the vertical ratio
/// `d_l(m+1)/d_l(m)`, built by evaluating the registry transcriptions:
/// `L = (L_num_rat + L_num_surd * sqrt(Usq)) / (2(m+1)(m-l+1)(m+l^2))`.
pub fn ratio_lower_bound_l(m: usize, l: usize) -> QuadraticSurd {
    let polys = L_POLYS.get_or_init(|| LBoundPolys {
        num_rat: reg::l_num_rat(),
        num_surd: reg::l_num_surd(),
        den: reg::l_den(),
        radicand: reg::usq(),
    });
    let pt = point_ml(m as i64, l as i64);
    let den = polys.den.eval(&pt);
    QuadraticSurd::new(
        polys.num_rat.eval(&pt) / &den,
        polys.num_surd.eval(&pt) / &den,
        polys.radicand.eval(&pt),
    )
    .expect("radicand is nonnegative for 0 <= l <= m")
}

/// The rational lower bound `(4m^2 + 7m + l + 3) / (2(m+1)(m-l+1))` for the
/// vertical ratio.
pub fn kp_bound(m: usize, l: usize) -> Rat {
    let (m, l) = (m as i128, l as i128);
    Rat::new(
        BigInt::from(4 * m * m + 7 * m + l + 3),
        BigInt::from(2 * (m + 1) * (m - l + 1)),
    )
}

/// The four Turán-ratio bounds on `d_l(m)^2 / (d_{l-1}(m) d_{l+1}(m))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuranBound {
    /// Strict upper bound `(m-l+1)(l+1) / ((m-l)l)`.
    CgUpper,
    /// Strict lower bound: upper-bound base times `(m+l)/(m+l+1)`.
    CgLower,
    /// Strict lower bound: base times `(m+l^2)/(m+l^2+1)`.
    NewLower,
    /// Strict lower bound: base times `(m+l+l^2)/(m+l+l^2+1)`.
    SharperLower,
}

impl TuranBound {
    pub const ALL: [TuranBound; 4] = [
        TuranBound::CgUpper,
        TuranBound::CgLower,
        TuranBound::NewLower,
        TuranBound::SharperLower,
    ];

    pub fn check_id(self) -> &'static str {
        match self {
            TuranBound::CgUpper => "cg_upper",
            TuranBound::CgLower => "cg_lower",
            TuranBound::NewLower => "new_lower",
            TuranBound::SharperLower => "sharper_lower",
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, TuranBound::CgUpper)
    }

    /// Exact bound value at `(m, l)`, `1 <= l <= m-1`.
    pub fn value(self, m: usize, l: usize) -> Rat {
        let (m, l) = (m as i128, l as i128);
        let base_num = (m - l + 1) * (l + 1);
        let base_den = (m - l) * l;
        let (extra_num, extra_den) = match self {
            TuranBound::CgUpper => (1, 1),
            TuranBound::CgLower => (m + l, m + l + 1),
            TuranBound::NewLower => (m + l * l, m + l * l + 1),
            TuranBound::SharperLower => (m + l + l * l, m + l + l * l + 1),
        };
        Rat::new(
            BigInt::from(base_num * extra_num),
            BigInt::from(base_den * extra_den),
        )
    }
}

// ---- instance helpers ---------------------------------------------------

fn strict_rat(m: usize, l: i64, lhs: Rat, rhs: Rat, greater: bool, context: &str) -> Instance {
    let ok = if greater { lhs > rhs } else { lhs < rhs };
    if ok {
        Instance::strict(m, l, lhs, rhs)
    } else {
        let op = if greater { ">" } else { "<" };
        Instance::fail(m, l, lhs, rhs, format!("{context}: expected lhs {op} rhs"))
    }
}

fn equality_rat(m: usize, l: i64, lhs: Rat, rhs: Rat, context: &str) -> Instance {
    if lhs == rhs {
        Instance::equality(m, l, lhs, rhs)
    } else {
        Instance::fail(m, l, lhs, rhs, format!("{context}: expected exact equality"))
    }
}

fn entry(tri: &Triangle, m: usize, l: i64) -> Rat {
    tri.entry_or_zero(m, l)
}

/// The quartic window expression
/// `4(d_l^2 - d_{l-1}d_{l+1})(d_{l+1}^2 - d_l d_{l+2}) - (d_l d_{l+1} - d_{l-1}d_{l+2})^2`.
fn hot_value(tri: &Triangle, m: usize, l: i64) -> Rat {
    let a = entry(tri, m, l - 1);
    let b = entry(tri, m, l);
    let c = entry(tri, m, l + 1);
    let d = entry(tri, m, l + 2);
    let first = &b * &b - &a * &c;
    let second = &c * &c - &b * &d;
    let cross = &b * &c - &a * &d;
    rat_int(4) * first * second - &cross * &cross
}

/// Discriminant of the cubic `a3 x^3 + 3 a2 x^2 + 3 a1 x + a0`
/// (18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 with
/// (a, b, c, d) = (a3, 3a2, 3a1, a0)).
pub fn jensen_cubic_disc(a0: &Rat, a1: &Rat, a2: &Rat, a3: &Rat) -> Rat {
    let a = a3.clone();
    let b = rat_int(3) * a2;
    let c = rat_int(3) * a1;
    let d = a0.clone();
    rat_int(18) * &a * &b * &c * &d - rat_int(4) * &b * &b * &b * &d + &b * &b * &c * &c
        - rat_int(4) * &a * &c * &c * &c
        - rat_int(27) * &a * &a * &d * &d
}

// ---- per-row instance builders ------------------------------------------

fn log_concavity_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    (1..m as i64)
        .map(|l| {
            let lhs = entry(tri, m, l).pow(2);
            let rhs = entry(tri, m, l - 1) * entry(tri, m, l + 1);
            strict_rat(m, l, lhs, rhs, true, "log-concavity")
        })
        .collect()
}

fn hot_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    (1..=m as i64 - 2)
        .map(|l| {
            let value = hot_value(tri, m, l);
            strict_rat(m, l, value, rat_int(0), true, "higher-order Turan window")
        })
        .collect()
}

fn jensen_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    (1..=m as i64 - 2)
        .map(|l| {
            let window = [
                entry(tri, m, l - 1),
                entry(tri, m, l),
                entry(tri, m, l + 1),
                entry(tri, m, l + 2),
            ];
            let disc = jensen_cubic_disc(&window[0], &window[1], &window[2], &window[3]);
            let quartic = hot_value(tri, m, l);
            if disc != rat_int(27) * &quartic {
                return Instance::fail(
                    m,
                    l,
                    disc,
                    quartic,
                    "cubic discriminant must equal 27 times the quartic window expression",
                );
            }
            strict_rat(
                m,
                l,
                disc,
                rat_int(0),
                true,
                "cubic discriminant (three distinct real roots)",
            )
        })
        .collect()
}

fn ratio_l_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    (0..=m)
        .map(|l| {
            let ratio = tri
                .vertical_ratio(m, l)
                .expect("rows m and m+1 must be present");
            let bound = ratio_lower_bound_l(m, l);
            let cmp = bound.cmp_rational(&ratio);
            let boundary = l == 0 || l == m;
            match (boundary, cmp) {
                (true, Ordering::Equal) => Instance::new(
                    m,
                    Some(l as i64),
                    Outcome::ExpectedEquality,
                    ratio,
                    bound,
                    "",
                ),
                (true, _) => Instance::fail(
                    m,
                    l as i64,
                    ratio,
                    bound,
                    "boundary column must equal the radical bound exactly",
                ),
                (false, Ordering::Less) => Instance::strict(m, l as i64, ratio, bound),
                (false, _) => Instance::fail(
                    m,
                    l as i64,
                    ratio,
                    bound,
                    "vertical ratio must strictly exceed the radical bound",
                ),
            }
        })
        .collect()
}

fn kp_instances(tri: &Triangle, m: usize, strict_only: bool) -> Vec<Instance> {
    let range = if strict_only { 1..m } else { 0..m + 1 };
    range
        .map(|l| {
            let ratio = tri
                .vertical_ratio(m, l)
                .expect("rows m and m+1 must be present");
            let bound = kp_bound(m, l);
            let boundary = l == 0 || l == m;
            if strict_only || !boundary {
                strict_rat(
                    m,
                    l as i64,
                    ratio,
                    bound,
                    true,
                    "vertical ratio vs rational lower bound",
                )
            } else {
                equality_rat(m, l as i64, ratio, bound, "boundary column")
            }
        })
        .collect()
}

fn turan_bound_instances(tri: &Triangle, m: usize, which: TuranBound) -> Vec<Instance> {
    (1..m)
        .map(|l| {
            let ratio = tri.turan_ratio(m, l).expect("interior column");
            let bound = which.value(m, l);
            strict_rat(
                m,
                l as i64,
                ratio,
                bound,
                !which.is_upper(),
                "Turan ratio vs bound",
            )
        })
        .collect()
}

fn bound_order_instances(m: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    // lower-bound chain on the Turan ratio, pointwise in l
    for l in 1..m {
        let cg = TuranBound::CgLower.value(m, l);
        let new = TuranBound::NewLower.value(m, l);
        let sharper = TuranBound::SharperLower.value(m, l);
        out.push(if l == 1 {
            // m + l and m + l^2 coincide at l = 1, so these two bounds are
            // equal there for every m
            let mut inst = equality_rat(m, 1, new.clone(), cg, "lower bounds at l = 1");
            if inst.outcome == Outcome::ExpectedEquality {
                inst.note = "the two lower bounds coincide at l = 1".to_string();
            }
            inst
        } else {
            strict_rat(m, l as i64, new.clone(), cg, true, "lower-bound ordering")
        });
        out.push(strict_rat(
            m,
            l as i64,
            sharper,
            new,
            true,
            "sharper lower bound dominates",
        ));
    }
    // radical bound dominates the rational bound on the vertical ratio
    for l in 0..=m {
        let radical = ratio_lower_bound_l(m, l);
        let rational = kp_bound(m, l);
        let inst = match radical.cmp_rational(&rational) {
            Ordering::Greater => Instance::new(
                m,
                Some(l as i64),
                Outcome::StrictPass,
                Value::Surd(radical),
                rational,
                "radical bound strictly above rational bound",
            ),
            Ordering::Equal => Instance::new(
                m,
                Some(l as i64),
                Outcome::ExpectedEquality,
                Value::Surd(radical),
                rational,
                "radical and rational bounds coincide",
            ),
            Ordering::Less => Instance::fail(
                m,
                l as i64,
                Value::Surd(radical),
                rational,
                "radical bound must dominate the rational bound",
            ),
        };
        out.push(inst);
    }
    out
}

fn factorial_lc_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    (1..m as i64)
        .map(|l| {
            let fl = factorial(l as u64);
            let lhs = Rat::from_integer(&fl * &fl) * entry(tri, m, l).pow(2);
            let rhs = Rat::from_integer(factorial(l as u64 - 1) * factorial(l as u64 + 1))
                * entry(tri, m, l - 1)
                * entry(tri, m, l + 1);
            strict_rat(m, l, lhs, rhs, true, "factorial-weighted log-concavity")
        })
        .collect()
}

fn houli_row_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    let row = tri.row(m).expect("row m must be present");
    let report = houli_verify(row, &make_bm_bounds(m), 1)
        .expect("triangle entries are strictly positive");
    let criterion_pass = report.passed();
    let mut instances = report.instances;
    if m >= 3 {
        // cross-check: the criterion's conclusion must agree with direct
        // verification of the quartic windows
        let hot_pass = hot_instances(tri, m).iter().all(|i| !i.outcome.is_fail());
        instances.push(if criterion_pass == hot_pass {
            Instance::new(
                m,
                None,
                Outcome::StrictPass,
                rat_int(criterion_pass as i64),
                rat_int(hot_pass as i64),
                "conclusion agrees with the direct quartic verification",
            )
        } else {
            Instance::new(
                m,
                None,
                Outcome::Fail,
                rat_int(criterion_pass as i64),
                rat_int(hot_pass as i64),
                "conclusion disagrees with the direct quartic verification",
            )
        });
    }
    instances
}

// ---- the registered checks ----------------------------------------------

macro_rules! row_check {
    ($ty:ident, $id:literal, $desc:literal, min_m: $min:expr, next_row: $next:expr,
     |$tri:ident, $m:ident| $params:expr, $run:expr) => {
        pub struct $ty;

        impl RowCheck for $ty {
            fn id(&self) -> &'static str {
                $id
            }

            fn description(&self) -> &'static str {
                $desc
            }

            fn min_m(&self) -> usize {
                $min
            }

            fn needs_next_row(&self) -> bool {
                $next
            }

            fn run(&self, $tri: &Triangle, $m: usize) -> CheckReport {
                CheckReport::from_instances($id, $params, $run)
            }
        }
    };
}

row_check!(
    MixedRecCheck,
    "mixed_rec",
    "two mixed recurrences coupling row m to row m+1, including the zero conventions",
    min_m: 0,
    next_row: true,
    |tri, m| format!("m = {m}, l in 0..={}", m + 1),
    mixed_recurrence_instances(tri, m)
);

row_check!(
    LogConcavityCheck,
    "log_concavity",
    "strict log-concavity of row m: d_l^2 > d_{l-1} d_{l+1} on the interior",
    min_m: 2,
    next_row: false,
    |tri, m| format!("m = {m}, l in 1..={}", m - 1),
    log_concavity_instances(tri, m)
);

row_check!(
    HotCheck,
    "hot",
    "strict higher-order Turan inequalities on all interior windows of row m",
    min_m: 3,
    next_row: false,
    |tri, m| format!("m = {m}, l in 1..={}", m - 2),
    hot_instances(tri, m)
);

row_check!(
    JensenCheck,
    "jensen",
    "positive discriminant of the windowed cubic with binomial weights (three distinct real roots)",
    min_m: 3,
    next_row: false,
    |tri, m| format!("m = {m}, l in 1..={}", m - 2),
    jensen_instances(tri, m)
);

row_check!(
    RatioLCheck,
    "ratio_L",
    "vertical ratio d_l(m+1)/d_l(m) strictly above the radical bound L(m,l), with exact equality at l = 0 and l = m",
    min_m: 1,
    next_row: true,
    |tri, m| format!("m = {m}, l in 0..={m}"),
    ratio_l_instances(tri, m)
);

row_check!(
    KpCheck,
    "kp",
    "vertical ratio vs the rational lower bound: equality on the boundary columns, strict inside",
    min_m: 1,
    next_row: true,
    |tri, m| format!("m = {m}, l in 0..={m}"),
    kp_instances(tri, m, false)
);

pub struct TuranBoundCheck(pub TuranBound);

impl RowCheck for TuranBoundCheck {
    fn id(&self) -> &'static str {
        self.0.check_id()
    }

    fn description(&self) -> &'static str {
        match self.0 {
            TuranBound::CgUpper => "Turan ratio strictly below (m-l+1)(l+1)/((m-l)l)",
            TuranBound::CgLower => "Turan ratio strictly above the (m+l)/(m+l+1)-scaled base bound",
            TuranBound::NewLower => {
                "Turan ratio strictly above the (m+l^2)/(m+l^2+1)-scaled base bound"
            }
            TuranBound::SharperLower => {
                "Turan ratio strictly above the (m+l+l^2)/(m+l+l^2+1)-scaled base bound"
            }
        }
    }

    fn min_m(&self) -> usize {
        2
    }

    fn needs_next_row(&self) -> bool {
        false
    }

    fn run(&self, tri: &Triangle, m: usize) -> CheckReport {
        CheckReport::from_instances(
            self.id(),
            format!("m = {m}, l in 1..={}", m - 1),
            turan_bound_instances(tri, m, self.0),
        )
    }
}

row_check!(
    BoundOrderCheck,
    "bound_order",
    "pointwise ordering of the bounds themselves: lower-bound chain on the Turan ratio and radical-vs-rational on the vertical ratio",
    min_m: 2,
    next_row: false,
    |_tri, m| format!("m = {m}, l in 0..={m}"),
    bound_order_instances(m)
);

row_check!(
    FactorialLcCheck,
    "factorial_lc",
    "strict log-concavity of the factorial-weighted row l! * d_l(m)",
    min_m: 2,
    next_row: false,
    |tri, m| format!("m = {m}, l in 1..={}", m - 1),
    factorial_lc_instances(tri, m)
);

row_check!(
    HouliCheck,
    "houli",
    "coupled-bound criterion on row m with g, h and window start N = 1, cross-checked against the direct quartic windows",
    min_m: 2,
    next_row: false,
    |tri, m| format!("m = {m}, n in 1..={}", m - 1),
    houli_row_instances(tri, m)
);

// ---- standalone check entry points --------------------------------------

fn require_rows(tri: &Triangle, m: usize, next: bool) -> Result<(), InequalitiesError> {
    tri.row(m)?;
    if next {
        tri.row(m + 1)?;
    }
    Ok(())
}

fn require_min(check: &'static str, m: usize, min_m: usize) -> Result<(), InequalitiesError> {
    if m < min_m {
        return Err(InequalitiesError::DomainTooSmall { check, min_m, m });
    }
    Ok(())
}

/// Strict log-concavity of row `m` (vacuous for `m <= 1`).
pub fn check_log_concavity(tri: &Triangle, m: usize) -> Result<CheckReport, InequalitiesError> {
    require_rows(tri, m, false)?;
    Ok(CheckReport::from_instances(
        "log_concavity",
        format!("m = {m}, l in 1..={}", m.saturating_sub(1)),
        log_concavity_instances(tri, m),
    ))
}

/// Strict higher-order Turán inequalities on row `m`; the statement's
/// domain starts at `m = 3`.
pub fn check_hot(tri: &Triangle, m: usize) -> Result<CheckReport, InequalitiesError> {
    require_min("hot", m, 3)?;
    require_rows(tri, m, false)?;
    Ok(HotCheck.run(tri, m))
}

/// Vertical ratio vs the radical bound `L(m, l)`: strict on the interior,
/// exact equality on the boundary columns.
pub fn check_ratio_lower_l(tri: &Triangle, m: usize) -> Result<CheckReport, InequalitiesError> {
    require_min("ratio_L", m, 1)?;
    require_rows(tri, m, true)?;
    Ok(RatioLCheck.run(tri, m))
}

/// Vertical ratio vs the rational lower bound. `strict` selects the sharp
/// interior-only claim (`1 <= l <= m-1`, strict); otherwise all columns are
/// checked with equality expected on the boundary.
pub fn check_ratio_lower_kp(
    tri: &Triangle,
    m: usize,
    strict: bool,
) -> Result<CheckReport, InequalitiesError> {
    require_min("kp", m, 1)?;
    require_rows(tri, m, true)?;
    let label = if strict { "strict interior" } else { "full row" };
    Ok(CheckReport::from_instances(
        "kp",
        format!("m = {m}, {label}"),
        kp_instances(tri, m, strict),
    ))
}

/// One of the four Turán-ratio bounds, strict on the interior columns.
pub fn check_turan_ratio_bounds(
    tri: &Triangle,
    m: usize,
    which: TuranBound,
) -> Result<CheckReport, InequalitiesError> {
    require_min(which.check_id(), m, 2)?;
    require_rows(tri, m, false)?;
    Ok(TuranBoundCheck(which).run(tri, m))
}

/// Strict log-concavity of the factorial-weighted row.
pub fn check_factorial_log_concavity(
    tri: &Triangle,
    m: usize,
) -> Result<CheckReport, InequalitiesError> {
    require_min("factorial_lc", m, 2)?;
    require_rows(tri, m, false)?;
    Ok(FactorialLcCheck.run(tri, m))
}

/// Positive discriminant of every windowed cubic of row `m` (`m >= 3`),
/// including the internal consistency check against the quartic windows.
pub fn check_jensen_cubic(tri: &Triangle, m: usize) -> Result<CheckReport, InequalitiesError> {
    require_min("jensen", m, 3)?;
    require_rows(tri, m, false)?;
    Ok(JensenCheck.run(tri, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::coeffs::{Triangle, TriangleMethod};
    use std::sync::OnceLock;

    fn tri() -> &'static Triangle {
        static TRI: OnceLock<Triangle> = OnceLock::new();
        TRI.get_or_init(|| Triangle::build(TriangleMethod::Recurrence, 41))
    }

    #[test]
    fn log_concavity_row_two() {
        let report = check_log_concavity(tri(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.count, 1);
        let inst = &report.instances[0];
        assert_eq!(inst.lhs.wire(), "225/16");
        assert_eq!(inst.rhs.wire(), "63/16");
        // m = 1 has no interior column
        let vacuous = check_log_concavity(tri(), 1).unwrap();
        assert!(vacuous.passed());
        assert_eq!(vacuous.count, 0);
    }

    #[test]
    fn hot_row_three() {
        let report = check_hot(tri(), 3).unwrap();
        assert!(report.passed());
        assert_eq!(report.count, 1);
        assert_eq!(report.instances[0].lhs.wire(), "8058555/1024");
        assert!(matches!(
            check_hot(tri(), 2),
            Err(InequalitiesError::DomainTooSmall { min_m: 3, .. })
        ));
    }

    #[test]
    fn ratio_l_row_two_examples() {
        let report = check_ratio_lower_l(tri(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.count, 3);
        // l = 0: equality 11/6; l = 1: 43/15 > 17/6; l = 2: equality 35/6
        assert_eq!(report.instances[0].outcome, Outcome::ExpectedEquality);
        assert_eq!(report.instances[0].lhs.wire(), "11/6");
        assert_eq!(report.instances[1].outcome, Outcome::StrictPass);
        assert_eq!(report.instances[1].lhs.wire(), "43/15");
        assert_eq!(report.instances[1].rhs.wire(), "17/6");
        assert_eq!(report.instances[2].outcome, Outcome::ExpectedEquality);
        assert_eq!(report.instances[2].lhs.wire(), "35/6");
        // equalities hold on boundary columns for every computed m
        for m in 1..=40 {
            let rep = check_ratio_lower_l(tri(), m).unwrap();
            assert!(rep.passed(), "m = {m}");
            let eq_count = rep
                .instances
                .iter()
                .filter(|i| i.outcome == Outcome::ExpectedEquality)
                .count();
            assert_eq!(eq_count, if m == 0 { 1 } else { 2 }, "m = {m}");
        }
    }

    #[test]
    fn kp_row_two_examples() {
        let report = check_ratio_lower_kp(tri(), 2, false).unwrap();
        assert!(report.passed());
        let wires: Vec<(String, String)> = report
            .instances
            .iter()
            .map(|i| (i.lhs.wire(), i.rhs.wire()))
            .collect();
        assert_eq!(
            wires,
            vec![
                ("11/6".to_string(), "11/6".to_string()),
                ("43/15".to_string(), "17/6".to_string()),
                ("35/6".to_string(), "35/6".to_string()),
            ]
        );
        let strict = check_ratio_lower_kp(tri(), 2, true).unwrap();
        assert!(strict.passed());
        assert_eq!(strict.count, 1);
    }

    #[test]
    fn turan_bounds_row_two() {
        let ratio = tri().turan_ratio(2, 1).unwrap();
        assert_eq!(ratio, rat(25, 7));
        assert_eq!(TuranBound::CgUpper.value(2, 1), rat(4, 1));
        assert_eq!(TuranBound::CgLower.value(2, 1), rat(3, 1));
        assert_eq!(TuranBound::NewLower.value(2, 1), rat(3, 1));
        assert_eq!(TuranBound::SharperLower.value(2, 1), rat(16, 5));
        for which in TuranBound::ALL {
            let report = check_turan_ratio_bounds(tri(), 2, which).unwrap();
            assert!(report.passed(), "{}", which.check_id());
            assert_eq!(report.count, 1);
        }
    }

    #[test]
    fn bound_order_row_sweep() {
        for m in 2..=40 {
            let report = BoundOrderCheck.run(tri(), m);
            assert!(report.passed(), "m = {m}: {report}");
            // exactly one expected equality from the l = 1 bound collision;
            // plus the two boundary columns where radical == rational
            let eq: Vec<_> = report
                .instances
                .iter()
                .filter(|i| i.outcome == Outcome::ExpectedEquality)
                .collect();
            assert!(eq.len() >= 3, "m = {m}: {} equalities", eq.len());
            assert!(eq.iter().any(|i| i.note.contains("l = 1")), "m = {m}");
        }
    }

    #[test]
    fn kp_equals_radical_bound_at_m2_l1() {
        // the radical collapses to a rational here and meets the rational
        // bound exactly
        let radical = ratio_lower_bound_l(2, 1);
        assert_eq!(radical.as_exact_rational(), Some(rat(17, 6)));
        assert_eq!(kp_bound(2, 1), rat(17, 6));
    }

    #[test]
    fn factorial_lc_rows() {
        let report = check_factorial_log_concavity(tri(), 2).unwrap();
        assert!(report.passed());
        // l = 1: (1!)^2 (15/4)^2 = 225/16 vs 0! * 2! * (21/8)(3/2) = 63/8
        assert_eq!(report.instances[0].lhs.wire(), "225/16");
        assert_eq!(report.instances[0].rhs.wire(), "63/8");
        for m in 2..=40 {
            assert!(check_factorial_log_concavity(tri(), m).unwrap().passed());
        }
    }

    #[test]
    fn jensen_rows_and_degenerate_window() {
        let report = check_jensen_cubic(tri(), 3).unwrap();
        assert!(report.passed());
        assert_eq!(report.count, 1);
        for m in 3..=40 {
            assert!(check_jensen_cubic(tri(), m).unwrap().passed(), "m = {m}");
        }
        // all-equal window: triple root, zero discriminant
        let one = rat(1, 1);
        assert_eq!(jensen_cubic_disc(&one, &one, &one, &one), rat(0, 1));
        assert!(matches!(
            check_jensen_cubic(tri(), 2),
            Err(InequalitiesError::DomainTooSmall { .. })
        ));
    }

    #[test]
    fn houli_check_includes_cross_check() {
        let report = HouliCheck.run(tri(), 5);
        assert!(report.passed());
        let last = report.instances.last().unwrap();
        assert!(last.note.contains("agrees"));
        assert_eq!(last.l, None);
    }

    #[test]
    fn corrupted_row_fails_with_witness() {
        // a tiny additive perturbation is far below the slack of the strict
        // inequalities but always breaks the exact coupling recurrences
        let bad = tri().perturbed(6, 3).unwrap();
        let report = MixedRecCheck.run(&bad, 6);
        assert!(!report.passed());
        assert!(report.failures().next().is_some());
        // a genuinely non-log-concave row is rejected with a witness column
        let csv = Triangle::build(TriangleMethod::DirectSum, 2)
            .to_csv()
            .replace("2,1,15,4", "2,1,3,2");
        let flat = Triangle::from_csv(&csv).unwrap();
        let report = check_log_concavity(&flat, 2).unwrap();
        assert!(!report.passed());
        let witness = report.failures().next().unwrap();
        assert_eq!(witness.l, Some(1));
        assert_eq!(witness.lhs.wire(), "9/4");
        assert_eq!(witness.rhs.wire(), "63/16");
    }

    #[test]
    fn radical_bound_is_exact_root_of_quadratic() {
        // sanity against the symbolic identity: A L^2 + B L + C evaluates
        // to zero when L is substituted numerically at a perfect-square
        // point
        let l_val = ratio_lower_bound_l(2, 1).as_exact_rational().unwrap();
        let pt = crate::poly::point_ml(2, 1);
        let a = crate::poly::registry::a_coef().eval(&pt);
        let b = crate::poly::registry::b_coef().eval(&pt);
        let c = crate::poly::registry::c_coef().eval(&pt);
        assert_eq!(a * &l_val * &l_val + b * &l_val + c, rat(0, 1));
    }
}
