//! Runtime verification of the inequality families on computed triangle
//! rows.
//!
//! Each named check implements [`RowCheck`] and verifies one inequality
//! family over a single row `m`, producing a [`CheckReport`] whose
//! instances carry exact witnesses. The checks are held in a fixed
//! [`registry`] and selected by id, so drivers can run any subset over a
//! range of rows with [`run_sweep`] and get deterministic, ordered output
//! independent of thread scheduling.

pub mod houli;
pub mod row_checks;

use crate::coeffs::{CoeffsError, Triangle};
use crate::report::CheckReport;
use rayon::prelude::*;
use thiserror::Error;

pub use row_checks::{
    check_factorial_log_concavity, check_hot, check_jensen_cubic, check_log_concavity,
    check_ratio_lower_kp, check_ratio_lower_l, check_turan_ratio_bounds, kp_bound,
    ratio_lower_bound_l, TuranBound,
};

#[derive(Debug, Error)]
pub enum InequalitiesError {
    /// The coupled-bound criterion requires a strictly positive sequence.
    #[error("sequence element at index {index} is not strictly positive (value {value})")]
    NonpositiveElement { index: usize, value: String },
    /// A check was requested below the smallest row its statement covers.
    #[error("check '{check}' requires m >= {min_m}, got m = {m}")]
    DomainTooSmall {
        check: &'static str,
        min_m: usize,
        m: usize,
    },
    #[error(transparent)]
    Coeffs(#[from] CoeffsError),
    #[error("unknown check id '{id}'; available: {available}")]
    UnknownCheck { id: String, available: String },
}

/// One named inequality check, run row by row.
///
/// `run` is total over rows the triangle actually holds: domain violations
/// surface as `Fail` instances, never panics, so a sweep over many rows
/// always produces a complete report. Callers must ensure the triangle
/// extends to row `m` (and `m + 1` when [`needs_next_row`] is true);
/// [`run_sweep`] checks this up front.
///
/// [`needs_next_row`]: RowCheck::needs_next_row
pub trait RowCheck: Send + Sync {
    /// Stable identifier used for selection and in report lines.
    fn id(&self) -> &'static str;

    /// One-line human description of the verified statement.
    fn description(&self) -> &'static str;

    /// Smallest `m` for which the statement is asserted.
    fn min_m(&self) -> usize {
        0
    }

    /// Whether verifying row `m` also reads row `m + 1`.
    fn needs_next_row(&self) -> bool {
        false
    }

    fn run(&self, tri: &Triangle, m: usize) -> CheckReport;
}

/// All registered checks in their canonical order.
pub fn registry() -> Vec<Box<dyn RowCheck>> {
    use row_checks::*;
    vec![
        Box::new(MixedRecCheck),
        Box::new(LogConcavityCheck),
        Box::new(HotCheck),
        Box::new(JensenCheck),
        Box::new(RatioLCheck),
        Box::new(KpCheck),
        Box::new(TuranBoundCheck(TuranBound::CgUpper)),
        Box::new(TuranBoundCheck(TuranBound::CgLower)),
        Box::new(TuranBoundCheck(TuranBound::NewLower)),
        Box::new(TuranBoundCheck(TuranBound::SharperLower)),
        Box::new(BoundOrderCheck),
        Box::new(FactorialLcCheck),
        Box::new(HouliCheck),
    ]
}

/// Ids of the registered checks, in canonical order.
pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id()).collect()
}

/// Resolve a list of requested ids into checks.
///
/// Requests are trimmed, duplicates are dropped, and the result follows
/// the canonical registry order regardless of request order. An unknown
/// id is an error listing the available ids.
pub fn find_checks<S: AsRef<str>>(ids: &[S]) -> Result<Vec<Box<dyn RowCheck>>, InequalitiesError> {
    let available = check_ids();
    let mut requested: Vec<&str> = Vec::new();
    for id in ids {
        let id = id.as_ref().trim();
        if !available.contains(&id) {
            return Err(InequalitiesError::UnknownCheck {
                id: id.to_string(),
                available: available.join(", "),
            });
        }
        if !requested.iter().any(|r| *r == id) {
            requested.push(id);
        }
    }
    Ok(registry()
        .into_iter()
        .filter(|c| requested.iter().any(|r| *r == c.id()))
        .collect())
}

/// Largest triangle row the given checks read when sweeping up to `m_max`.
pub fn needed_max_m(checks: &[Box<dyn RowCheck>], m_max: usize) -> usize {
    if checks.iter().any(|c| c.needs_next_row()) {
        m_max + 1
    } else {
        m_max
    }
}

/// Run every check on every row `check.min_m() <= m <= m_max`, in
/// parallel, and return the reports ordered by (canonical check order, m).
pub fn run_sweep(
    tri: &Triangle,
    checks: &[Box<dyn RowCheck>],
    m_max: usize,
) -> Result<Vec<CheckReport>, InequalitiesError> {
    if m_max > 0 || !checks.is_empty() {
        tri.row(needed_max_m(checks, m_max))?;
    }
    let jobs: Vec<(usize, usize)> = checks
        .iter()
        .enumerate()
        .flat_map(|(idx, c)| (c.min_m()..=m_max).map(move |m| (idx, m)))
        .collect();
    let mut reports: Vec<((usize, usize), CheckReport)> = jobs
        .par_iter()
        .map(|&(idx, m)| ((idx, m), checks[idx].run(tri, m)))
        .collect();
    reports.sort_by_key(|(key, _)| *key);
    Ok(reports.into_iter().map(|(_, report)| report).collect())
}
