//! The identity suite: every symbolic equality the verification relies on,
//! checked as exact polynomial (or surd-ring) equality by expansion.
//!
//! Suite entries:
//! * `lemma23_id1` — opening factorization used to compare the radical
//!   bounds: `(4m²+9m-2l²+5)²(m+l²+1) - l²(4l⁴+8l²m+13l²+m+1)` equals
//!   `(m+l+1)(m-l+1)` times the cubic factor.
//! * `lemma23_id2` — `(C1·U + C3)² - (C2·V + l·U·V)² = C4 - C5·U` in the
//!   surd ring.
//! * `lemma23_id3` — `C4² - C5²·U²` equals
//!   `16(m+l²)²(m+l²+1)²(m+l+1)²(m-l+1)²·C6`.
//! * `thm31_quadratic` — the discriminant identity `B² - 4A·C = Delta`.
//! * `thm31_root` — the radical lower bound is an exact root:
//!   `A·L² + B·L + C = 0` in the ring extended by `U`.
//! * `ellm_case` — `(4m⁴+12m³+17m²+13m+5)² - (2m+3)²·W²` equals the
//!   positive residual `4(m²+m+1)(4m³+19m²+21m+4)`.
//! * `houli_gg`, `houli_gh`, `houli_hg`, `houli_hh` — the printed
//!   numerators of `d(x, y)` for the four combinations of the coupled
//!   bounds `g`, `h`, checked in cross-multiplied form.
//!
//! `rmell_positive` is accepted as an alias for `lemma23_id1` (it is the
//! same factorization viewed as a positivity statement).

use super::registry as reg;
use super::surd_ring::SurdRingElem;
use super::{MultiPoly, PolyError, Var};
use rayon::prelude::*;
use serde::Serialize;

/// One side of an identity: a plain polynomial or a reduced surd-ring
/// element.
#[derive(Clone, Debug)]
pub enum IdentitySide {
    Poly(MultiPoly),
    Elem(SurdRingElem),
}

impl IdentitySide {
    pub fn term_count(&self) -> usize {
        match self {
            IdentitySide::Poly(p) => p.term_count(),
            IdentitySide::Elem(e) => e.term_count(),
        }
    }

    fn to_elem(&self) -> SurdRingElem {
        match self {
            IdentitySide::Poly(p) => SurdRingElem::from_poly(p.clone()),
            IdentitySide::Elem(e) => e.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub pass: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub note: String,
}

/// The canonical suite, in run order.
pub const IDENTITY_NAMES: [&str; 10] = [
    "lemma23_id1",
    "lemma23_id2",
    "lemma23_id3",
    "thm31_quadratic",
    "thm31_root",
    "ellm_case",
    "houli_gg",
    "houli_gh",
    "houli_hg",
    "houli_hh",
];

pub fn identity_names() -> Vec<&'static str> {
    IDENTITY_NAMES.to_vec()
}

/// True for canonical suite names and the `rmell_positive` alias.
pub fn is_identity_name(name: &str) -> bool {
    name == "rmell_positive" || IDENTITY_NAMES.contains(&name)
}

fn l_sq() -> MultiPoly {
    MultiPoly::monomial(num_traits::One::one(), &[(Var::L, 2)])
}

fn shift_n(p: &MultiPoly) -> MultiPoly {
    let n_plus_1 = MultiPoly::var(Var::N) + MultiPoly::one();
    p.subst(Var::N, &n_plus_1)
}

/// Numerator of `d(x, y) = 4(1-x)(1-y) - (1-xy)²` for `x = a/b`, `y = c/d`
/// over the common denominator `(bd)²`:
/// `4(b-a)(d-c)bd - (bd-ac)²`.
fn dform_num(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    let bd = b * d;
    MultiPoly::int(4) * (b - a) * (d - c) * &bd - (&bd - a * c).pow(2)
}

/// Cross-multiplied sides for one coupled-bound identity: the claim
/// `dform_num/(bd)² == printed_num/printed_den` becomes
/// `dform_num * printed_den == printed_num * (bd)²`.
fn houli_sides(
    x: (MultiPoly, MultiPoly),
    y: (MultiPoly, MultiPoly),
    printed_num: MultiPoly,
    printed_den: MultiPoly,
) -> (IdentitySide, IdentitySide) {
    let (a, b) = x;
    let (c, d) = y;
    let lhs = dform_num(&a, &b, &c, &d) * printed_den;
    let rhs = printed_num * (b * d).pow(2);
    (IdentitySide::Poly(lhs), IdentitySide::Poly(rhs))
}

fn g_pair() -> (MultiPoly, MultiPoly) {
    (reg::g_num(), reg::g_den())
}

fn h_pair() -> (MultiPoly, MultiPoly) {
    (reg::h_num(), reg::h_den())
}

fn next_pair(pair: (MultiPoly, MultiPoly)) -> (MultiPoly, MultiPoly) {
    (shift_n(&pair.0), shift_n(&pair.1))
}

/// Build both sides of a named identity.
pub fn build_identity(name: &str) -> Result<(IdentitySide, IdentitySide), PolyError> {
    match name {
        "lemma23_id1" | "rmell_positive" => {
            let lhs = reg::q1().pow(2) * reg::ml2p1() - l_sq() * reg::v_inner();
            let rhs = reg::lp() * reg::lm() * reg::lemma23_factor();
            Ok((IdentitySide::Poly(lhs), IdentitySide::Poly(rhs)))
        }
        "lemma23_id2" => {
            let ring = reg::bm_surd_ring();
            let first = SurdRingElem {
                c1: reg::c3(),
                cu: reg::c1(),
                ..SurdRingElem::zero()
            };
            let second = SurdRingElem {
                cv: reg::c2(),
                cuv: reg::l_num_surd(),
                ..SurdRingElem::zero()
            };
            let lhs = ring.square(&first).sub(&ring.square(&second));
            let rhs = SurdRingElem::from_poly(reg::c4()).sub(&SurdRingElem::u_times(reg::c5()));
            Ok((IdentitySide::Elem(lhs), IdentitySide::Elem(rhs)))
        }
        "lemma23_id3" => {
            let lhs = reg::c4().pow(2) - reg::c5().pow(2) * reg::usq();
            let rhs = MultiPoly::int(16)
                * reg::ml2().pow(2)
                * reg::ml2p1().pow(2)
                * reg::lp().pow(2)
                * reg::lm().pow(2)
                * reg::c6();
            Ok((IdentitySide::Poly(lhs), IdentitySide::Poly(rhs)))
        }
        "thm31_quadratic" => {
            let lhs = reg::b_coef().pow(2) - MultiPoly::int(4) * reg::a_coef() * reg::c_coef();
            Ok((IdentitySide::Poly(lhs), IdentitySide::Poly(reg::delta())))
        }
        "thm31_root" => {
            // A*(P0 + l*U)² + B*D*(P0 + l*U) + C*D² reduces to 0, where
            // P0 + l*U is the bound numerator and D its denominator.
            let ring = reg::bm_surd_ring();
            let root = SurdRingElem {
                c1: reg::l_num_rat(),
                cu: reg::l_num_surd(),
                ..SurdRingElem::zero()
            };
            let d = reg::l_den();
            let quad_term = ring.mul(&SurdRingElem::from_poly(reg::a_coef()), &ring.square(&root));
            let lin_term = ring.mul(&SurdRingElem::from_poly(reg::b_coef() * &d), &root);
            let const_term = SurdRingElem::from_poly(reg::c_coef() * d.pow(2));
            let lhs = quad_term.add(&lin_term).add(&const_term);
            Ok((IdentitySide::Elem(lhs), IdentitySide::Elem(SurdRingElem::zero())))
        }
        "ellm_case" => {
            let lhs = reg::poly_m(&[(4, 4), (12, 3), (17, 2), (13, 1), (5, 0)]).pow(2)
                - reg::poly_m(&[(2, 1), (3, 0)]).pow(2) * reg::wsq();
            Ok((IdentitySide::Poly(lhs), IdentitySide::Poly(reg::ellm_residual())))
        }
        "houli_gg" => Ok(houli_sides(
            g_pair(),
            next_pair(g_pair()),
            reg::gg_num(),
            reg::gg_den(),
        )),
        "houli_gh" => Ok(houli_sides(
            g_pair(),
            next_pair(h_pair()),
            reg::f_big(),
            reg::gh_den(),
        )),
        "houli_hg" => Ok(houli_sides(
            h_pair(),
            next_pair(g_pair()),
            reg::g_big(),
            reg::hg_den(),
        )),
        "houli_hh" => Ok(houli_sides(
            h_pair(),
            next_pair(h_pair()),
            MultiPoly::int(4) * reg::h_big(),
            reg::hh_den(),
        )),
        _ => Err(PolyError::UnknownName {
            name: name.to_string(),
            available: IDENTITY_NAMES.join(", ") + ", rmell_positive",
        }),
    }
}

/// Compare two sides exactly. Mixed poly/elem comparisons are promoted to
/// the surd ring (a polynomial is an element with zero surd components).
pub fn check_identity(name: &str, lhs: &IdentitySide, rhs: &IdentitySide) -> IdentityOutcome {
    let (pass, note) = match (lhs, rhs) {
        (IdentitySide::Poly(a), IdentitySide::Poly(b)) => {
            let diff = a - b;
            if diff.is_zero() {
                (true, String::new())
            } else {
                (
                    false,
                    format!("difference is nonzero with {} terms", diff.term_count()),
                )
            }
        }
        _ => {
            let diff = lhs.to_elem().sub(&rhs.to_elem());
            if diff.is_zero() {
                (true, String::new())
            } else {
                (
                    false,
                    format!(
                        "difference is nonzero with {} terms across components",
                        diff.term_count()
                    ),
                )
            }
        }
    };
    let mut note = note;
    if name == "rmell_positive" && note.is_empty() {
        note = "alias of lemma23_id1".to_string();
    }
    IdentityOutcome {
        name: name.to_string(),
        pass,
        lhs_terms: lhs.term_count(),
        rhs_terms: rhs.term_count(),
        note,
    }
}

/// Build and check one identity.
pub fn verify_identity(name: &str) -> Result<IdentityOutcome, PolyError> {
    let (lhs, rhs) = build_identity(name)?;
    Ok(check_identity(name, &lhs, &rhs))
}

/// Run the whole suite (entries are independent and run in parallel;
/// results come back in canonical order).
pub fn verify_identity_suite() -> Vec<IdentityOutcome> {
    IDENTITY_NAMES
        .par_iter()
        .map(|name| verify_identity(name).expect("canonical names always build"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_all_pass() {
        let outcomes = verify_identity_suite();
        assert_eq!(outcomes.len(), 10);
        for out in &outcomes {
            assert!(out.pass, "{} failed: {}", out.name, out.note);
            assert!(out.lhs_terms > 0 || out.name == "thm31_root");
        }
        let names: Vec<&str> = outcomes.iter().map(|o| o.name.as_str()).collect();
        assert_eq!(names, IDENTITY_NAMES.to_vec());
    }

    #[test]
    fn root_identity_collapses_to_zero() {
        let out = verify_identity("thm31_root").unwrap();
        assert!(out.pass);
        assert_eq!(out.lhs_terms, 0);
        assert_eq!(out.rhs_terms, 0);
    }

    #[test]
    fn alias_resolves() {
        let out = verify_identity("rmell_positive").unwrap();
        assert!(out.pass);
        assert_eq!(out.name, "rmell_positive");
        assert!(out.note.contains("alias"));
        assert!(is_identity_name("rmell_positive"));
        assert!(is_identity_name("houli_hh"));
        assert!(!is_identity_name("houli_xx"));
    }

    #[test]
    fn unknown_identity_is_an_error() {
        let err = verify_identity("nope").unwrap_err();
        assert!(err.to_string().contains("nope"));
    }

    #[test]
    fn mistranscribed_coefficient_fails_and_names_the_identity() {
        // Simulate a transcription slip: C4 off by one in its constant
        // coefficient makes the surd-ring identity fail loudly.
        let (lhs, _) = build_identity("lemma23_id2").unwrap();
        let bad_c4 = crate::poly::registry::c4() + MultiPoly::one();
        let bad_rhs = SurdRingElem::from_poly(bad_c4)
            .sub(&SurdRingElem::u_times(crate::poly::registry::c5()));
        let out = check_identity("lemma23_id2", &lhs, &IdentitySide::Elem(bad_rhs));
        assert!(!out.pass);
        assert_eq!(out.name, "lemma23_id2");
        assert!(out.note.contains("nonzero"));
    }
}
