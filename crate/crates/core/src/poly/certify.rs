//! Positivity certificates by shift substitution.
//!
//! To certify that a registry polynomial is strictly positive on its
//! integer domain, substitute away the domain's lower bounds — e.g. for
//! points with `l >= 1`, `m >= l + 1`, set `m = l + 1 + t` and then
//! `l = 1 + s` — and expand. If every coefficient of the shifted
//! polynomial in `t`, `s` is nonnegative and the constant term is
//! strictly positive, the original is strictly positive at every integer
//! point of the domain (in fact on the whole real cone). This certifies
//! positivity for *all* `m` at once, which no finite sweep can.
//!
//! When the coefficient test fails the target may still be positive (the
//! certificate is sufficient, not necessary), so a sampling fallback
//! records a weaker `SampledNonneg` verdict instead of failing outright.

use super::identities::IdentityOutcome;
use super::registry as reg;
use super::{point_m, point_ml, point_mn, Exps, MultiPoly, Point, Var};
use crate::arith::{fmt_frac, Rat};
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

/// Integer domain on which a target is claimed strictly positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// `l >= 1`, `m >= l + 1`.
    LM,
    /// `n >= 1`, `m >= n + 1`.
    NM,
    /// `m >= 2`.
    M2,
}

impl Domain {
    pub fn describe(self) -> &'static str {
        match self {
            Domain::LM => "l >= 1, m >= l + 1",
            Domain::NM => "n >= 1, m >= n + 1",
            Domain::M2 => "m >= 2",
        }
    }

    pub fn substitution(self) -> &'static str {
        match self {
            Domain::LM => "m := l + 1 + t, l := 1 + s",
            Domain::NM => "m := n + 1 + t, n := 1 + s",
            Domain::M2 => "m := 2 + t",
        }
    }

    fn corner(self) -> Point {
        match self {
            Domain::LM => point_ml(2, 1),
            Domain::NM => point_mn(2, 1),
            Domain::M2 => point_m(2),
        }
    }

    fn corner_desc(self) -> &'static str {
        match self {
            Domain::LM => "(m, l) = (2, 1)",
            Domain::NM => "(m, n) = (2, 1)",
            Domain::M2 => "m = 2",
        }
    }

    fn apply(self, p: &MultiPoly) -> MultiPoly {
        let one = MultiPoly::one();
        let t = MultiPoly::var(Var::T);
        let s = MultiPoly::var(Var::S);
        match self {
            Domain::LM => p
                .subst(Var::M, &(MultiPoly::var(Var::L) + &one + t))
                .subst(Var::L, &(s + one)),
            Domain::NM => p
                .subst(Var::M, &(MultiPoly::var(Var::N) + &one + t))
                .subst(Var::N, &(s + one)),
            Domain::M2 => p.subst(Var::M, &(t + MultiPoly::int(2))),
        }
    }

    fn sample_points(self) -> Vec<(Point, String)> {
        match self {
            Domain::LM => (1i64..=10)
                .flat_map(|x| {
                    (1i64..=12).map(move |off| {
                        (point_ml(x + off, x), format!("(m, l) = ({}, {})", x + off, x))
                    })
                })
                .collect(),
            Domain::NM => (1i64..=10)
                .flat_map(|x| {
                    (1i64..=12).map(move |off| {
                        (point_mn(x + off, x), format!("(m, n) = ({}, {})", x + off, x))
                    })
                })
                .collect(),
            Domain::M2 => (2i64..=41).map(|m| (point_m(m), format!("m = {m}"))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityVerdict {
    /// Shifted polynomial has only nonnegative coefficients and a strictly
    /// positive constant term: positivity holds for the entire domain.
    AllCoeffsNonneg,
    /// Coefficient test failed, but direct evaluation at every sampled
    /// integer point was strictly positive. Not a proof for all `m`.
    SampledNonneg { points: usize, negative_term: String },
    /// Positivity could not be supported at all.
    Failed { reason: String },
}

impl PositivityVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            PositivityVerdict::AllCoeffsNonneg => "all_coeffs_nonneg",
            PositivityVerdict::SampledNonneg { .. } => "sampled_nonneg",
            PositivityVerdict::Failed { .. } => "failed",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, PositivityVerdict::AllCoeffsNonneg)
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, PositivityVerdict::Failed { .. })
    }
}

#[derive(Clone, Debug)]
pub struct PositivityCertificate {
    pub name: String,
    pub domain: Domain,
    pub target: MultiPoly,
    pub shifted: MultiPoly,
    pub verdict: PositivityVerdict,
    /// Least point of the domain and the target's value there — the
    /// strictness witness for a nonnegative-coefficients certificate.
    pub corner_point: String,
    pub corner_value: Rat,
}

impl PositivityCertificate {
    pub fn shifted_terms(&self) -> usize {
        self.shifted.term_count()
    }

    pub fn passed(&self) -> bool {
        !self.verdict.is_failure()
    }
}

fn term_string(e: &Exps, c: &Rat) -> String {
    let pairs: Vec<(Var, u32)> = Var::ALL
        .iter()
        .zip(e.iter())
        .filter(|(_, &exp)| exp > 0)
        .map(|(v, &exp)| (*v, exp as u32))
        .collect();
    MultiPoly::monomial(c.clone(), &pairs).to_string()
}

/// Certify that `target > 0` at every integer point of `domain`.
pub fn certify_positive(name: &str, target: MultiPoly, domain: Domain) -> PositivityCertificate {
    let corner_point = domain.corner_desc().to_string();
    let corner_value = target.eval(&domain.corner());
    let shifted = domain.apply(&target);

    let make = |verdict| PositivityCertificate {
        name: name.to_string(),
        domain,
        target: target.clone(),
        shifted: shifted.clone(),
        verdict,
        corner_point: corner_point.clone(),
        corner_value: corner_value.clone(),
    };

    if target.is_zero() {
        return make(PositivityVerdict::Failed {
            reason: "target is the zero polynomial".to_string(),
        });
    }
    let leftover: Vec<&str> = [Var::M, Var::L, Var::N]
        .iter()
        .filter(|v| shifted.degree_in(**v) > 0)
        .map(|v| v.name())
        .collect();
    if !leftover.is_empty() {
        return make(PositivityVerdict::Failed {
            reason: format!(
                "substitution left domain variables {{{}}} in the shifted polynomial",
                leftover.join(", ")
            ),
        });
    }

    let negative = shifted
        .iter_terms()
        .find(|(_, c)| c.is_negative())
        .map(|(e, c)| term_string(e, c));
    match negative {
        None => {
            let constant = shifted.constant_term();
            if constant.is_positive() {
                make(PositivityVerdict::AllCoeffsNonneg)
            } else {
                make(PositivityVerdict::Failed {
                    reason: "all coefficients nonnegative but the constant term vanishes, \
                             so strictness fails at the domain corner"
                        .to_string(),
                })
            }
        }
        Some(neg_term) => {
            // Sufficiency lost; fall back to sampling the original target.
            let samples = domain.sample_points();
            for (point, desc) in &samples {
                let value = target.eval(point);
                if !value.is_positive() {
                    return make(PositivityVerdict::Failed {
                        reason: format!(
                            "negative shifted coefficient ({neg_term}) and value {} at {desc}",
                            fmt_frac(&value)
                        ),
                    });
                }
            }
            make(PositivityVerdict::SampledNonneg {
                points: samples.len(),
                negative_term: neg_term,
            })
        }
    }
}

/// The positivity targets, in report order.
pub fn positivity_targets() -> Vec<(&'static str, MultiPoly, Domain)> {
    vec![
        ("C4", reg::c4(), Domain::LM),
        ("C5", reg::c5(), Domain::LM),
        ("C6", reg::c6(), Domain::LM),
        ("F", reg::f_big(), Domain::NM),
        ("G", reg::g_big(), Domain::NM),
        ("H", reg::h_big(), Domain::NM),
        ("lemma23_factor", reg::lemma23_factor(), Domain::LM),
        ("ellm_residual", reg::ellm_residual(), Domain::M2),
    ]
}

/// Certify every target (independent, run in parallel, report order kept).
pub fn certify_all_targets() -> Vec<PositivityCertificate> {
    positivity_targets()
        .into_par_iter()
        .map(|(name, poly, domain)| certify_positive(name, poly, domain))
        .collect()
}

#[derive(Serialize)]
struct CertificateJson {
    name: String,
    domain: String,
    substitution: String,
    verdict: String,
    shifted_terms: usize,
    corner_point: String,
    corner_value: String,
    detail: String,
}

#[derive(Serialize)]
struct ExportJson<'a> {
    identities: &'a [IdentityOutcome],
    positivity: Vec<CertificateJson>,
}

/// JSON export of a full certification run: identity outcomes plus
/// positivity certificates, with exact values as `num/den` strings.
pub fn certificate_export_json(
    identities: &[IdentityOutcome],
    certificates: &[PositivityCertificate],
) -> String {
    let positivity = certificates
        .iter()
        .map(|c| CertificateJson {
            name: c.name.clone(),
            domain: c.domain.describe().to_string(),
            substitution: c.domain.substitution().to_string(),
            verdict: c.verdict.as_str().to_string(),
            shifted_terms: c.shifted_terms(),
            corner_point: c.corner_point.clone(),
            corner_value: fmt_frac(&c.corner_value),
            detail: match &c.verdict {
                PositivityVerdict::AllCoeffsNonneg => String::new(),
                PositivityVerdict::SampledNonneg {
                    points,
                    negative_term,
                } => {
                    format!("sampled {points} points; negative shifted coefficient {negative_term}")
                }
                PositivityVerdict::Failed { reason } => reason.clone(),
            },
        })
        .collect();
    let export = ExportJson {
        identities,
        positivity,
    };
    serde_json::to_string_pretty(&export).expect("export serializes")
}
