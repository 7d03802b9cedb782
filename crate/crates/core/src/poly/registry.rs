//! The named-polynomial registry: every polynomial that the identity suite
//! and the positivity certificates operate on is transcribed here, once, in
//! its printed grouped form. Nothing in this file is derived — the point is
//! that a reader can audit each transcription by eye, and the identity suite
//! then proves the transcriptions consistent with each other.
//!
//! Naming overview:
//! * `C1..C6` — coefficients in the surd-ring factorization that drives the
//!   radical lower bound for the vertical ratio `d_l(m+1)/d_l(m)`.
//! * `A`, `B`, `C`, `Delta` — the quadratic (in the bound value) whose
//!   discriminant is `Delta`, and whose root the radical bound is.
//! * `F`, `G`, `H` — numerators of the rational functions
//!   `d(g(n), h(n+1))`, `d(h(n), g(n+1))`, and (up to a factor 4)
//!   `d(h(n), h(n+1))` appearing in the coupled-bound criterion.
//! * `Wsq`, `Usq`, `Vsq` — squares of the surds `W`, `U`, `V`.
//! * `L_num_rat`, `L_num_surd`, `R_num_rat`, `R_num_surd` — rational part
//!   and surd coefficient of the numerators of the radical bounds `L(m,l)`
//!   and `R(m,l)`.
//! * `g_num`, `g_den`, `h_num`, `h_den` — the coupled bound functions
//!   `g(n)`, `h(n)` as numerator/denominator pairs in `m`, `n`.
//! * `lemma23_factor` — the cubic factor in the opening factorization of
//!   the radical-bound comparison; `ellm_residual` — the residual proving
//!   the `l = m` edge case.

use super::surd_ring::SurdRing;
use super::{MultiPoly, PolyError, Var};
use crate::arith::rat_int;

fn c(x: i64) -> MultiPoly {
    MultiPoly::int(x)
}

/// Monomial `c * m^em * l^el`.
fn ml(coef: i64, em: u32, el: u32) -> MultiPoly {
    MultiPoly::monomial(rat_int(coef), &[(Var::M, em), (Var::L, el)])
}

/// Monomial `c * m^em * n^en`.
fn mn(coef: i64, em: u32, en: u32) -> MultiPoly {
    MultiPoly::monomial(rat_int(coef), &[(Var::M, em), (Var::N, en)])
}

/// Dense polynomial in `m` alone from `(coefficient, degree)` pairs.
pub(crate) fn poly_m(terms: &[(i64, u32)]) -> MultiPoly {
    terms
        .iter()
        .map(|&(coef, deg)| ml(coef, deg, 0))
        .fold(MultiPoly::zero(), |acc, t| acc + t)
}

// ---- shared atoms -------------------------------------------------------

/// `4m^2 + 7m - 2l^2 + 3`.
pub(crate) fn q0() -> MultiPoly {
    ml(4, 2, 0) + ml(7, 1, 0) + ml(-2, 0, 2) + ml(3, 0, 0)
}

/// `4m^2 + 9m - 2l^2 + 5`.
pub(crate) fn q1() -> MultiPoly {
    ml(4, 2, 0) + ml(9, 1, 0) + ml(-2, 0, 2) + ml(5, 0, 0)
}

/// `m + l^2`.
pub(crate) fn ml2() -> MultiPoly {
    ml(1, 1, 0) + ml(1, 0, 2)
}

/// `m + l^2 + 1`.
pub(crate) fn ml2p1() -> MultiPoly {
    ml2() + c(1)
}

/// `m + l + 1`.
pub(crate) fn lp() -> MultiPoly {
    ml(1, 1, 0) + ml(1, 0, 1) + c(1)
}

/// `m - l + 1`.
pub(crate) fn lm() -> MultiPoly {
    ml(1, 1, 0) + ml(-1, 0, 1) + c(1)
}

/// `4l^4 + 8l^2 m + 5l^2 + m` (the radicand of `U` before the `m + l^2`
/// factor).
pub(crate) fn u_inner() -> MultiPoly {
    ml(4, 0, 4) + ml(8, 1, 2) + ml(5, 0, 2) + ml(1, 1, 0)
}

/// `4l^4 + 8l^2 m + 13l^2 + m + 1`.
pub(crate) fn v_inner() -> MultiPoly {
    ml(4, 0, 4) + ml(8, 1, 2) + ml(13, 0, 2) + ml(1, 1, 0) + ml(1, 0, 0)
}

/// `m + n^2`.
pub(crate) fn mn2() -> MultiPoly {
    mn(1, 1, 0) + mn(1, 0, 2)
}

/// `m - n`.
pub(crate) fn m_minus_n() -> MultiPoly {
    mn(1, 1, 0) + mn(-1, 0, 1)
}

// ---- registry entries ---------------------------------------------------

/// `C1 = (m + l^2 + 1)(4m^2 + 9m - 2l^2 + 5)`.
pub fn c1() -> MultiPoly {
    ml2p1() * q1()
}

/// `C2 = (m + l^2)(4m^2 + 7m - 2l^2 + 3)`.
pub fn c2() -> MultiPoly {
    ml2() * q0()
}

/// `C3 = l(4l^2 - 1)(m + l^2)(m + l^2 + 1)`.
pub fn c3() -> MultiPoly {
    ml(1, 0, 1) * (ml(4, 0, 2) - c(1)) * ml2() * ml2p1()
}

/// `C4 = 4(m + l^2)(m + l^2 + 1)(m + l + 1)(m - l + 1) * (16l^6 m + 28l^6
/// + 32l^4 m^2 + 76l^4 m + 32l^2 m^3 + 33l^4 + 104l^2 m^2 + 102l^2 m
/// + 4m^3 + 29l^2 + 8m^2 + 4m)`.
pub fn c4() -> MultiPoly {
    let core = ml(16, 1, 6)
        + ml(28, 0, 6)
        + ml(32, 2, 4)
        + ml(76, 1, 4)
        + ml(32, 3, 2)
        + ml(33, 0, 4)
        + ml(104, 2, 2)
        + ml(102, 1, 2)
        + ml(4, 3, 0)
        + ml(29, 0, 2)
        + ml(8, 2, 0)
        + ml(4, 1, 0);
    c(4) * ml2() * ml2p1() * lp() * lm() * core
}

/// `C5 = 8l(4l^2 m + 7l^2 + 2m + 2)(m + l + 1)(m - l + 1)(m + l^2)(m + l^2 + 1)`.
pub fn c5() -> MultiPoly {
    let inner = ml(4, 1, 2) + ml(7, 0, 2) + ml(2, 1, 0) + ml(2, 0, 0);
    ml(8, 0, 1) * inner * lp() * lm() * ml2() * ml2p1()
}

/// `C6`, entered monomial by monomial as printed (33 terms).
pub fn c6() -> MultiPoly {
    ml(256, 3, 10)
        + ml(960, 2, 10)
        + ml(1536, 4, 8)
        + ml(1136, 1, 10)
        + ml(7040, 3, 8)
        + ml(2048, 5, 6)
        + ml(420, 0, 10)
        + ml(11568, 2, 8)
        + ml(11072, 4, 6)
        + ml(1024, 6, 4)
        + ml(8128, 1, 8)
        + ml(22720, 3, 6)
        + ml(6912, 5, 4)
        + ml(2089, 0, 8)
        + ml(22188, 2, 6)
        + ml(18272, 4, 4)
        + ml(256, 6, 2)
        + ml(10340, 1, 6)
        + ml(24280, 3, 4)
        + ml(1344, 5, 2)
        + ml(1834, 0, 6)
        + ml(17140, 2, 4)
        + ml(2720, 4, 2)
        + ml(16, 6, 0)
        + ml(6084, 1, 4)
        + ml(2664, 3, 2)
        + ml(64, 5, 0)
        + ml(841, 0, 4)
        + ml(1264, 2, 2)
        + ml(96, 4, 0)
        + ml(232, 1, 2)
        + ml(64, 3, 0)
        + ml(16, 2, 0)
}

/// `A = 4(m + 1)^2 (m - l + 1)^2 (m + l^2)` — leading coefficient of the
/// vertical-ratio quadratic.
pub fn a_coef() -> MultiPoly {
    c(4) * (ml(1, 1, 0) + c(1)).pow(2) * lm().pow(2) * ml2()
}

/// `B = -4(m + 1)(m - l + 1)(m + l^2)(4m^2 + 7m - 2l^2 + 3)`.
pub fn b_coef() -> MultiPoly {
    -(c(4) * (ml(1, 1, 0) + c(1)) * lm() * ml2() * q0())
}

/// `C` — constant coefficient of the vertical-ratio quadratic (13 terms,
/// as printed).
pub fn c_coef() -> MultiPoly {
    ml(16, 4, 2)
        + ml(-16, 2, 4)
        + ml(40, 3, 2)
        + ml(-32, 1, 4)
        + ml(16, 5, 0)
        + ml(45, 2, 2)
        + ml(-17, 0, 4)
        + ml(56, 4, 0)
        + ml(29, 1, 2)
        + ml(73, 3, 0)
        + ml(9, 0, 2)
        + ml(42, 2, 0)
        + ml(9, 1, 0)
}

/// `Delta = 16l^2 (m + 1)^2 (m - l + 1)^2 (m + l^2)(4l^4 + 8l^2 m + 5l^2 + m)`
/// — the discriminant `B^2 - 4AC`.
pub fn delta() -> MultiPoly {
    ml(16, 0, 2) * (ml(1, 1, 0) + c(1)).pow(2) * lm().pow(2) * ml2() * u_inner()
}

/// `F` — numerator of `d(g(n), h(n+1))`, in printed grouped form.
pub fn f_big() -> MultiPoly {
    mn(4, 3, 4)
        + mn(8, 4, 2)
        + mn(7, 3, 3)
        + mn(1, 1, 4) * (mn(31, 1, 0) - mn(7, 0, 1))
        + mn(1, 0, 6)
        + mn(4, 5, 0)
        + mn(8, 4, 1)
        + mn(43, 3, 2)
        + mn(93, 2, 3)
        + mn(1, 0, 4) * (mn(17, 1, 0) - mn(1, 0, 1))
        + mn(16, 4, 0)
        + mn(60, 3, 1)
        + mn(162, 2, 2)
        + mn(115, 1, 3)
        + mn(3, 0, 4)
        + mn(40, 3, 0)
        + mn(156, 2, 1)
        + mn(203, 1, 2)
        + mn(41, 0, 3)
        + mn(64, 2, 0)
        + mn(164, 1, 1)
        + mn(80, 0, 2)
        + mn(52, 1, 0)
        + mn(60, 0, 1)
        + mn(16, 0, 0)
}

/// `G` — numerator of `d(h(n), g(n+1))`, in printed grouped form.
pub fn g_big() -> MultiPoly {
    mn(4, 3, 4)
        + mn(1, 3, 2) * (mn(8, 1, 0) - mn(5, 0, 1))
        + mn(19, 2, 4)
        + mn(1, 1, 5)
        + mn(1, 0, 6)
        + mn(4, 4, 0) * m_minus_n()
        + mn(1, 2, 2) * (mn(31, 1, 0) - mn(7, 0, 1))
        + mn(25, 1, 4)
        + mn(7, 0, 5)
        + mn(16, 3, 0) * m_minus_n()
        + mn(1, 1, 2) * (mn(54, 1, 0) - mn(13, 0, 1))
        + mn(23, 0, 4)
        + mn(1, 2, 0) * (mn(20, 1, 0) - mn(12, 0, 1))
        + mn(27, 1, 2)
        + mn(1, 0, 3)
        + mn(8, 2, 0)
}

/// `H` — `4H` is the numerator of `d(h(n), h(n+1))`; grouped by powers of
/// `n` as printed.
pub fn h_big() -> MultiPoly {
    let mp = |k: i64| mn(1, 1, 0) + mn(k, 0, 0);
    let n_pow = |e: u32| mn(1, 0, e);
    mp(3) * mp(2).pow(2) * n_pow(8)
        + mp(8) * mp(3) * mp(2) * n_pow(7)
        + poly_m(&[(4, 4), (24, 3), (47, 2), (62, 1), (73, 0)]) * n_pow(6)
        + poly_m(&[(3, 4), (38, 3), (101, 2), (67, 1), (51, 0)]) * n_pow(5)
        + poly_m(&[(6, 5), (31, 4), (60, 3), (117, 2), (65, 1), (15, 0)]) * n_pow(4)
        + poly_m(&[(3, 5), (38, 4), (68, 3), (83, 2), (43, 1), (1, 0)]) * n_pow(3)
        + poly_m(&[(1, 2), (1, 1)]) * poly_m(&[(4, 4), (14, 3), (31, 2), (22, 1), (13, 0)]) * n_pow(2)
        + ml(1, 2, 0) * mp(9) * mp(1).pow(3) * n_pow(1)
        + ml(1, 2, 0) * poly_m(&[(1, 2), (1, 1), (4, 0)]) * mp(1).pow(3)
}

/// `Wsq = W^2 = (m^2 + m + 1)(4m^4 + 8m^3 + 13m^2 + m + 1)` — the square of
/// the surd appearing in the `l = m` edge case.
pub fn wsq() -> MultiPoly {
    poly_m(&[(1, 2), (1, 1), (1, 0)]) * poly_m(&[(4, 4), (8, 3), (13, 2), (1, 1), (1, 0)])
}

/// `Usq = U^2 = (m + l^2)(4l^4 + 8l^2 m + 5l^2 + m)`.
pub fn usq() -> MultiPoly {
    ml2() * u_inner()
}

/// `Vsq = V^2 = (m + l^2 + 1)(4l^4 + 8l^2 m + 13l^2 + m + 1)`.
pub fn vsq() -> MultiPoly {
    ml2p1() * v_inner()
}

/// Rational part of the numerator of `L(m,l)`:
/// `(4m^2 + 7m - 2l^2 + 3)(m + l^2)`. The full bound is
/// `(L_num_rat + L_num_surd*U) / (2(m+1)(m-l+1)(m+l^2))`.
pub fn l_num_rat() -> MultiPoly {
    q0() * ml2()
}

/// Surd coefficient of the numerator of `L(m,l)`: `l`.
pub fn l_num_surd() -> MultiPoly {
    ml(1, 0, 1)
}

/// Rational part of the numerator of `R(m,l)`:
/// `(4m^2 + 9m - 2l^2 + 5)(m + l^2 + 1)`. The full bound is
/// `(R_num_rat + R_num_surd*V) / (2(m+2)(m-l+2)(m+l^2+1))`.
pub fn r_num_rat() -> MultiPoly {
    q1() * ml2p1()
}

/// Surd coefficient of the numerator of `R(m,l)`: `-l`.
pub fn r_num_surd() -> MultiPoly {
    ml(-1, 0, 1)
}

/// Denominator of `L(m,l)`: `2(m + 1)(m - l + 1)(m + l^2)`.
pub fn l_den() -> MultiPoly {
    c(2) * (ml(1, 1, 0) + c(1)) * lm() * ml2()
}

/// Denominator of `R(m,l)`: `2(m + 2)(m - l + 2)(m + l^2 + 1)`.
pub fn r_den() -> MultiPoly {
    c(2) * (ml(1, 1, 0) + c(2)) * (lm() + c(1)) * ml2p1()
}

/// Numerator of `g(n) = (m - n)n / ((m - n + 1)(n + 1))`.
pub fn g_num() -> MultiPoly {
    m_minus_n() * mn(1, 0, 1)
}

/// Denominator of `g(n)`.
pub fn g_den() -> MultiPoly {
    (m_minus_n() + c(1)) * (mn(1, 0, 1) + c(1))
}

/// Numerator of `h(n) = g(n) * (m + n^2 + 1)/(m + n^2)`.
pub fn h_num() -> MultiPoly {
    g_num() * (mn2() + c(1))
}

/// Denominator of `h(n)`.
pub fn h_den() -> MultiPoly {
    g_den() * mn2()
}

/// The cubic factor in the opening factorization of the radical-bound
/// comparison: `16l^2 m^2 + 40l^2 m + 16m^3 + 29l^2 + 56m^2 + 65m + 25`.
pub fn lemma23_factor() -> MultiPoly {
    ml(16, 2, 2) + ml(40, 1, 2) + ml(16, 3, 0) + ml(29, 0, 2) + ml(56, 2, 0) + ml(65, 1, 0)
        + ml(25, 0, 0)
}

/// Residual proving the `l = m` edge case:
/// `4(m^2 + m + 1)(4m^3 + 19m^2 + 21m + 4)`.
pub fn ellm_residual() -> MultiPoly {
    c(4) * poly_m(&[(1, 2), (1, 1), (1, 0)]) * poly_m(&[(4, 3), (19, 2), (21, 1), (4, 0)])
}

// ---- auxiliary numerators/denominators for the coupled-bound identity
//      checks (not registry names, but transcribed here so that the whole
//      audit surface stays in one file) ----------------------------------

/// Numerator of `d(g(n), g(n+1))`: `4(m + 1)^2 (m + 2)`.
pub fn gg_num() -> MultiPoly {
    c(4) * (mn(1, 1, 0) + c(1)).pow(2) * (mn(1, 1, 0) + c(2))
}

/// Denominator of `d(g(n), g(n+1))`: `(m - n)(m - n + 1)^2 (n + 1)(n + 2)^2`.
pub fn gg_den() -> MultiPoly {
    m_minus_n() * (m_minus_n() + c(1)).pow(2) * (mn(1, 0, 1) + c(1)) * (mn(1, 0, 1) + c(2)).pow(2)
}

/// Denominator of `d(g(n), h(n+1))`: `gg_den * (n^2 + 2n + m + 1)^2`.
pub fn gh_den() -> MultiPoly {
    gg_den() * (mn(1, 0, 2) + mn(2, 0, 1) + mn(1, 1, 0) + c(1)).pow(2)
}

/// Denominator of `d(h(n), g(n+1))`: `gg_den * (n^2 + m)^2`.
pub fn hg_den() -> MultiPoly {
    gg_den() * mn2().pow(2)
}

/// Denominator of `d(h(n), h(n+1))`: `gg_den * (n^2 + m)^2 (n^2 + 2n + m + 1)^2`.
pub fn hh_den() -> MultiPoly {
    hg_den() * (mn(1, 0, 2) + mn(2, 0, 1) + mn(1, 1, 0) + c(1)).pow(2)
}

/// The canonical surd ring: `U^2 = Usq(m,l)`, `V^2 = Vsq(m,l)`.
pub fn bm_surd_ring() -> SurdRing {
    SurdRing::new(usq(), vsq())
}

/// Every name accepted by [`build_named`].
pub const NAMES: [&str; 26] = [
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "A",
    "B",
    "C",
    "Delta",
    "F",
    "G",
    "H",
    "Wsq",
    "Usq",
    "Vsq",
    "L_num_rat",
    "L_num_surd",
    "R_num_rat",
    "R_num_surd",
    "g_num",
    "g_den",
    "h_num",
    "h_den",
    "lemma23_factor",
    "ellm_residual",
];

pub fn registry_names() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// Build a registry polynomial by name.
pub fn build_named(name: &str) -> Result<MultiPoly, PolyError> {
    match name {
        "C1" => Ok(c1()),
        "C2" => Ok(c2()),
        "C3" => Ok(c3()),
        "C4" => Ok(c4()),
        "C5" => Ok(c5()),
        "C6" => Ok(c6()),
        "A" => Ok(a_coef()),
        "B" => Ok(b_coef()),
        "C" => Ok(c_coef()),
        "Delta" => Ok(delta()),
        "F" => Ok(f_big()),
        "G" => Ok(g_big()),
        "H" => Ok(h_big()),
        "Wsq" => Ok(wsq()),
        "Usq" => Ok(usq()),
        "Vsq" => Ok(vsq()),
        "L_num_rat" => Ok(l_num_rat()),
        "L_num_surd" => Ok(l_num_surd()),
        "R_num_rat" => Ok(r_num_rat()),
        "R_num_surd" => Ok(r_num_surd()),
        "g_num" => Ok(g_num()),
        "g_den" => Ok(g_den()),
        "h_num" => Ok(h_num()),
        "h_den" => Ok(h_den()),
        "lemma23_factor" => Ok(lemma23_factor()),
        "ellm_residual" => Ok(ellm_residual()),
        _ => Err(PolyError::UnknownName {
            name: name.to_string(),
            available: NAMES.join(", "),
        }),
    }
}
