//! Structured verification outcomes and their JSON-lines wire format.
//!
//! Every checker produces a stream of [`Instance`] records (one per verified
//! inequality or identity instance) aggregated into a [`CheckReport`]. The
//! external format is JSON lines, one instance per line:
//!
//! ```text
//! {"check": str, "m": int, "l": int|null, "verdict": "pass"|"fail",
//!  "lhs": "num/den", "rhs": "num/den", "note": str}
//! ```
//!
//! Verdict inputs are always exact rationals. When the right-hand side of a
//! comparison is an irrational surd, the `rhs` field carries a rational lower
//! bracket and the `note` field carries the exact surd; the bracket is
//! display-only and never contradicts the exact verdict.

use crate::arith::{fmt_frac, QuadraticSurd, Rat};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Aggregate pass/fail state of a whole check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Outcome of a single verified instance.
///
/// `ExpectedEquality` marks positions where the theory demands exact equality
/// (for example the boundary columns of the vertical-ratio bound); it counts
/// as a pass but is always listed among the witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    StrictPass,
    ExpectedEquality,
    Fail,
}

impl Outcome {
    pub fn is_fail(self) -> bool {
        matches!(self, Outcome::Fail)
    }
}

/// One side of a comparison: an exact rational or an exact quadratic surd.
#[derive(Clone, Debug)]
pub enum Value {
    Rational(Rat),
    Surd(QuadraticSurd),
}

impl Value {
    /// The `num/den` wire form. A surd that is exactly rational is folded;
    /// an irrational surd is rendered as its 64-bit lower bracket endpoint
    /// (the exact value goes into the line's note).
    pub fn wire(&self) -> String {
        match self {
            Value::Rational(r) => fmt_frac(r),
            Value::Surd(s) => match s.as_exact_rational() {
                Some(r) => fmt_frac(&r),
                None => fmt_frac(&s.bracket(64).0),
            },
        }
    }

    /// Extra note text for values whose wire form is not exact.
    fn wire_note(&self) -> Option<String> {
        match self {
            Value::Surd(s) if s.as_exact_rational().is_none() => Some(format!(
                "exact value {} (field shows rational lower bracket, display only)",
                s
            )),
            _ => None,
        }
    }

    /// Truncated decimal for display columns; never used in verdicts.
    pub fn approx_decimal(&self, digits: usize) -> String {
        match self {
            Value::Rational(r) => crate::arith::rat_to_decimal(r, digits),
            Value::Surd(s) => s.approx_decimal(digits),
        }
    }
}

impl From<Rat> for Value {
    fn from(r: Rat) -> Self {
        Value::Rational(r)
    }
}

impl From<QuadraticSurd> for Value {
    fn from(s: QuadraticSurd) -> Self {
        Value::Surd(s)
    }
}

/// One verified instance: parameters, compared values, and outcome.
#[derive(Clone, Debug)]
pub struct Instance {
    pub m: usize,
    /// The inner index (ℓ or n); `None` for row- or sequence-level records.
    pub l: Option<i64>,
    pub outcome: Outcome,
    pub lhs: Value,
    pub rhs: Value,
    pub note: String,
}

impl Instance {
    pub fn new(
        m: usize,
        l: Option<i64>,
        outcome: Outcome,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
        note: impl Into<String>,
    ) -> Self {
        Instance {
            m,
            l,
            outcome,
            lhs: lhs.into(),
            rhs: rhs.into(),
            note: note.into(),
        }
    }

    pub fn strict(m: usize, l: i64, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Instance::new(m, Some(l), Outcome::StrictPass, lhs, rhs, "")
    }

    pub fn equality(m: usize, l: i64, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Instance::new(m, Some(l), Outcome::ExpectedEquality, lhs, rhs, "")
    }

    pub fn fail(
        m: usize,
        l: i64,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
        note: impl Into<String>,
    ) -> Self {
        Instance::new(m, Some(l), Outcome::Fail, lhs, rhs, note)
    }

    /// Serializable line form under the given check id.
    pub fn to_line(&self, check_id: &str) -> ReportLine {
        let mut notes: Vec<String> = Vec::new();
        if self.outcome == Outcome::ExpectedEquality {
            notes.push("expected equality".to_string());
        }
        if !self.note.is_empty() {
            notes.push(self.note.clone());
        }
        if let Some(extra) = self.rhs.wire_note() {
            notes.push(extra);
        }
        ReportLine {
            check: check_id.to_string(),
            m: self.m as u64,
            l: self.l,
            verdict: if self.outcome.is_fail() {
                Verdict::Fail.as_str().to_string()
            } else {
                Verdict::Pass.as_str().to_string()
            },
            lhs: self.lhs.wire(),
            rhs: self.rhs.wire(),
            note: notes.join("; "),
        }
    }
}

/// Structured outcome of one check over a parameter range.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_id: String,
    /// Human-readable range descriptor, e.g. `m in 3..=300, l in 1..=m-2`.
    pub params: String,
    pub verdict: Verdict,
    /// Number of instances checked.
    pub count: usize,
    pub instances: Vec<Instance>,
}

impl CheckReport {
    pub fn from_instances(
        check_id: impl Into<String>,
        params: impl Into<String>,
        instances: Vec<Instance>,
    ) -> Self {
        let verdict = if instances.iter().any(|i| i.outcome.is_fail()) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        CheckReport {
            check_id: check_id.into(),
            params: params.into(),
            verdict,
            count: instances.len(),
            instances,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Failures and expected-equality cases — everything worth listing.
    pub fn witnesses(&self) -> impl Iterator<Item = &Instance> {
        self.instances
            .iter()
            .filter(|i| i.outcome != Outcome::StrictPass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| i.outcome.is_fail())
    }

    /// All instances as JSON lines (no trailing newline).
    pub fn jsonl(&self) -> String {
        self.instances
            .iter()
            .map(|i| i.to_line(&self.check_id).to_json())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} instances, {} witnesses) [{}]",
            self.check_id,
            self.verdict.as_str(),
            self.count,
            self.witnesses().count(),
            self.params
        )
    }
}

/// One line of the JSON-lines report stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub check: String,
    pub m: u64,
    pub l: Option<i64>,
    pub verdict: String,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

impl ReportLine {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report line serialization cannot fail")
    }

    pub fn parse(line: &str) -> Result<ReportLine, serde_json::Error> {
        serde_json::from_str(line)
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == "fail"
    }
}
