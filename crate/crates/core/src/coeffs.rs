//! The Boros-Moll coefficient triangle `d_l(m)`, computed three independent
//! ways and cross-validated exactly.
//!
//! The defining single sum is
//!
//! ```text
//! d_l(m) = 2^(-2m) * sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, k) C(k, l)
//! ```
//!
//! which makes every entry a positive rational whose denominator divides
//! `2^(2m)`. The three construction methods:
//!
//! - **direct sum**: the formula above, integer-scaled by `2^(2m)`;
//! - **double sum**: expand `(x+1)^j (x-1)^k / 2^(3(k+j))` over the double
//!   sum with weights `C(2m+1, 2j) C(m-j, k) C(2k+2j, k+j)` and collect
//!   powers of `x`;
//! - **recurrence**: the three-term recurrence in `m`,
//!   `4(m+1)(m+2)(m+2-l) d_l(m+2) = 2(m+1)(8m^2+24m-4l^2+19) d_l(m+1)
//!    - (4m+3)(4m+5)(m+l+1) d_l(m)`, seeded with rows 0 and 1 and closed at
//!   the corner with `d_m(m) = 2^(-m) C(2m, m)`.
//!
//! Two further mixed recurrences couple adjacent rows and columns; they are
//! verified over whole triangles by [`check_mixed_recurrences`].

use crate::arith::{fmt_frac, parse_frac, rat_int, Rat};
use crate::report::{CheckReport, Instance, Outcome};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffsError {
    #[error("index out of range: m = {m}, l = {l}")]
    IndexOutOfRange { m: usize, l: i64 },
    #[error("row for m = {m} not computed (triangle holds m <= {max_m})")]
    RowMissing { m: usize, max_m: usize },
    #[error("row length mismatch: expected {expected} entries, got {got}")]
    RowLength { expected: usize, got: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Binomial coefficient with the extended convention `C(n, k) = 0` for
/// `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Exact integer division; panics if `d` does not divide `n` (all callers
/// divide by factors known to divide exactly).
fn exact_div(n: BigInt, d: &BigInt) -> BigInt {
    let (q, r) = num_integer::div_rem(n, d.clone());
    assert!(r.is_zero(), "inexact division in coefficient update");
    q
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// The corner entry `d_m(m) = 2^(-m) C(2m, m)` (the `k = m` term is the only
/// one surviving at `l = m`).
pub fn corner(m: usize) -> Rat {
    Rat::new(binom(2 * m as u64, m as i64), pow2(m))
}

/// Integer weights `A_k = 2^k C(2m-2k, m-k) C(m+k, k)` for `k = lo..=m`,
/// computed incrementally:
/// `A_{k+1} = A_k (m-k)(m+k+1) / ((2m-2k-1)(k+1))` with `A_0 = C(2m, m)`.
fn direct_weights(m: usize, lo: usize) -> Vec<BigInt> {
    let mb = m as i64;
    let mut a = binom(2 * m as u64, m as i64);
    let mut out = Vec::with_capacity(m - lo + 1);
    for k in 0..=m as i64 {
        if k >= lo as i64 {
            out.push(a.clone());
        }
        if k < mb {
            let num = a * ((mb - k) * (mb + k + 1));
            a = exact_div(num, &BigInt::from((2 * mb - 2 * k - 1) * (k + 1)));
        }
    }
    out
}

/// One coefficient straight from the defining sum.
pub fn d_direct(m: usize, l: usize) -> Result<Rat, CoeffsError> {
    if l > m {
        return Err(CoeffsError::IndexOutOfRange { m, l: l as i64 });
    }
    let weights = direct_weights(m, l);
    // C(k, l) for k = l..=m, incrementally: C(k+1, l) = C(k, l)(k+1)/(k+1-l)
    let mut ckl = BigInt::one();
    let mut sum = BigInt::zero();
    for (i, a) in weights.iter().enumerate() {
        let k = (l + i) as i64;
        sum += a * &ckl;
        ckl = exact_div(ckl * (k + 1), &BigInt::from(k + 1 - l as i64));
    }
    Ok(Rat::new(sum, pow2(2 * m)))
}

/// Full row `m` from the defining sum, sharing the weights `A_k` across all
/// columns: `2^(2m) d_l(m) = sum_k A_k C(k, l)`.
pub fn row_direct_sum(m: usize) -> Vec<Rat> {
    let weights = direct_weights(m, 0);
    let mut acc = vec![BigInt::zero(); m + 1];
    let mut pascal = vec![BigInt::one()]; // C(k, .) for the current k
    for (k, a) in weights.iter().enumerate() {
        for (l, c) in pascal.iter().enumerate() {
            acc[l] += a * c;
        }
        if k < m {
            let mut next = vec![BigInt::one(); k + 2];
            for l in 1..=k {
                next[l] = &pascal[l - 1] + &pascal[l];
            }
            pascal = next;
        }
    }
    let den = pow2(2 * m);
    acc.into_iter().map(|n| Rat::new(n, den.clone())).collect()
}

/// Full row `m` by expanding the double sum over `(j, k)` and collecting
/// powers of `x`.
///
/// Internally the expansion runs in the basis `y = x - 1` (so `(x-1)^k` is
/// `y^k` and `(x+1)^j` is `(y+2)^j`), scaled by `8^m` to stay in integers:
///
/// ```text
/// 8^m P_m(y+1) = sum_j C(2m+1, 2j) (y+2)^j
///                * sum_k C(m-j, k) C(2k+2j, k+j) 8^(m-j-k) y^k
/// ```
///
/// and finishes with the exact Taylor shift back to powers of `x`.
pub fn row_double_sum(m: usize) -> Vec<Rat> {
    // central binomials C(2i, i) for i = 0..=m
    let mut central = Vec::with_capacity(m + 1);
    central.push(BigInt::one());
    for i in 0..m as i64 {
        let next = exact_div(&central[i as usize] * (2 * (2 * i + 1)), &BigInt::from(i + 1));
        central.push(next);
    }
    let mut pow8 = Vec::with_capacity(m + 1);
    pow8.push(BigInt::one());
    for _ in 0..m {
        pow8.push(pow8.last().unwrap() * 8);
    }

    let mut s = vec![BigInt::zero(); m + 1]; // coefficients in y
    let mut ybase = vec![BigInt::one()]; // (y+2)^j, ascending powers
    for j in 0..=m {
        let c2j = binom(2 * m as u64 + 1, 2 * j as i64);
        // T_j(y) = sum_k C(m-j, k) C(2k+2j, k+j) 8^(m-j-k) y^k
        let mut cmjk = BigInt::one(); // C(m-j, k), incrementally in k
        let mut tj = Vec::with_capacity(m - j + 1);
        for k in 0..=(m - j) {
            tj.push(&cmjk * &central[k + j] * &pow8[m - j - k]);
            if k < m - j {
                cmjk = exact_div(cmjk * ((m - j - k) as i64), &BigInt::from(k as i64 + 1));
            }
        }
        for (a, ya) in ybase.iter().enumerate() {
            let w = &c2j * ya;
            for (b, tb) in tj.iter().enumerate() {
                s[a + b] += &w * tb;
            }
        }
        if j < m {
            // multiply the base by (y + 2)
            let mut next = vec![BigInt::zero(); j + 2];
            for (i, c) in ybase.iter().enumerate() {
                next[i] += c * 2;
                next[i + 1] += c;
            }
            ybase = next;
        }
    }

    // Taylor shift y -> x - 1 by Horner over descending coefficients.
    let mut shifted: Vec<BigInt> = Vec::with_capacity(m + 1);
    for c in s.into_iter().rev() {
        let mut next = vec![BigInt::zero(); shifted.len() + 1];
        for (i, r) in shifted.iter().enumerate() {
            next[i + 1] += r; // * x
            next[i] -= r; // * (-1)
        }
        next[0] += c;
        shifted = next;
    }
    let den = pow8[m].clone();
    shifted
        .into_iter()
        .map(|n| Rat::new(n, den.clone()))
        .collect()
}

/// Row `m+2` from the three-term recurrence in `m`, given rows `m` and `m+1`.
///
/// The leading factor `4(m+1)(m+2)(m+2-l)` vanishes at `l = m+2`, so that
/// last entry is closed with [`corner`]. Boundary convention: `d_l` is zero
/// outside `0 <= l <= m`.
pub fn row_from_recurrence(row_m: &[Rat], row_m1: &[Rat], m: usize) -> Result<Vec<Rat>, CoeffsError> {
    if row_m.len() != m + 1 {
        return Err(CoeffsError::RowLength {
            expected: m + 1,
            got: row_m.len(),
        });
    }
    if row_m1.len() != m + 2 {
        return Err(CoeffsError::RowLength {
            expected: m + 2,
            got: row_m1.len(),
        });
    }
    let mi = m as i64;
    let mut out = Vec::with_capacity(m + 3);
    for l in 0..=mi + 1 {
        let a = &row_m1[l as usize];
        let b = if l <= mi {
            row_m[l as usize].clone()
        } else {
            Rat::zero()
        };
        let num = rat_int(2 * (mi + 1) * (8 * mi * mi + 24 * mi - 4 * l * l + 19)) * a
            - rat_int((4 * mi + 3) * (4 * mi + 5) * (mi + l + 1)) * b;
        let den = rat_int(4 * (mi + 1) * (mi + 2) * (mi + 2 - l));
        out.push(num / den);
    }
    out.push(corner(m + 2));
    Ok(out)
}

/// How a triangle was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleMethod {
    DirectSum,
    DoubleSum,
    Recurrence,
}

impl TriangleMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            TriangleMethod::DirectSum => "direct_sum",
            TriangleMethod::DoubleSum => "double_sum",
            TriangleMethod::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for TriangleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TriangleMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct_sum" => Ok(TriangleMethod::DirectSum),
            "double_sum" => Ok(TriangleMethod::DoubleSum),
            "recurrence" => Ok(TriangleMethod::Recurrence),
            other => Err(format!("unknown triangle method {other:?}")),
        }
    }
}

/// Rows `m = 0..=max_m` of coefficients, immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    method: TriangleMethod,
    rows: Vec<Vec<Rat>>,
}

impl Triangle {
    /// Builds the triangle up to `max_m` with the chosen method. The two
    /// summation methods parallelize across rows; the recurrence is
    /// sequential in `m` (each row needs the two previous ones).
    pub fn build(method: TriangleMethod, max_m: usize) -> Triangle {
        let rows = match method {
            TriangleMethod::DirectSum => (0..=max_m)
                .into_par_iter()
                .map(row_direct_sum)
                .collect(),
            TriangleMethod::DoubleSum => (0..=max_m)
                .into_par_iter()
                .map(row_double_sum)
                .collect(),
            TriangleMethod::Recurrence => {
                let mut rows = vec![row_direct_sum(0)];
                if max_m >= 1 {
                    rows.push(row_direct_sum(1));
                }
                for m in 0..max_m.saturating_sub(1) {
                    let next = row_from_recurrence(&rows[m], &rows[m + 1], m)
                        .expect("internally constructed rows have the right lengths");
                    rows.push(next);
                }
                rows
            }
        };
        Triangle { method, rows }
    }

    pub fn from_rows(method: TriangleMethod, rows: Vec<Vec<Rat>>) -> Result<Triangle, CoeffsError> {
        for (m, row) in rows.iter().enumerate() {
            if row.len() != m + 1 {
                return Err(CoeffsError::RowLength {
                    expected: m + 1,
                    got: row.len(),
                });
            }
        }
        Ok(Triangle { method, rows })
    }

    pub fn method(&self) -> TriangleMethod {
        self.method
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, m: usize) -> Result<&[Rat], CoeffsError> {
        self.rows
            .get(m)
            .map(|r| r.as_slice())
            .ok_or(CoeffsError::RowMissing {
                m,
                max_m: self.max_m(),
            })
    }

    /// `d_l(m)`; errors on indices outside the triangle.
    pub fn entry(&self, m: usize, l: usize) -> Result<&Rat, CoeffsError> {
        if l > m {
            return Err(CoeffsError::IndexOutOfRange { m, l: l as i64 });
        }
        Ok(&self.row(m)?[l])
    }

    /// `d_l(m)` under the boundary convention: zero for `l < 0` or `l > m`.
    pub fn entry_or_zero(&self, m: usize, l: i64) -> Rat {
        if l < 0 || l > m as i64 {
            return Rat::zero();
        }
        self.rows[m][l as usize].clone()
    }

    /// Vertical ratio `d_l(m+1) / d_l(m)`.
    pub fn vertical_ratio(&self, m: usize, l: usize) -> Result<Rat, CoeffsError> {
        let num = self.entry(m + 1, l)?.clone();
        let den = self.entry(m, l)?;
        Ok(num / den)
    }

    /// Turán ratio `d_l(m)^2 / (d_{l-1}(m) d_{l+1}(m))` for interior `l`.
    pub fn turan_ratio(&self, m: usize, l: usize) -> Result<Rat, CoeffsError> {
        if l == 0 || l >= m {
            return Err(CoeffsError::IndexOutOfRange { m, l: l as i64 });
        }
        let row = self.row(m)?;
        let d = &row[l];
        Ok(d * d / (&row[l - 1] * &row[l + 1]))
    }

    /// A copy with `d_l(m)` bumped by `+1/2^(2m)` — the smallest positive
    /// step that keeps the entry on its 2-adic grid. Test fixture: the
    /// result deliberately violates the triangle's defining identities.
    pub fn perturbed(&self, m: usize, l: usize) -> Result<Triangle, CoeffsError> {
        self.entry(m, l)?;
        let mut copy = self.clone();
        copy.rows[m][l] += Rat::new(BigInt::one(), pow2(2 * m));
        Ok(copy)
    }

    /// CSV export: a method comment, the `m,l,numerator,denominator` header,
    /// then one data line per coefficient in (m, l) order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# method: {}\n", self.method));
        out.push_str("m,l,numerator,denominator\n");
        for (m, row) in self.rows.iter().enumerate() {
            for (l, d) in row.iter().enumerate() {
                out.push_str(&format!("{},{},{},{}\n", m, l, d.numer(), d.denom()));
            }
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Triangle, CoeffsError> {
        let err = |line: usize, message: String| CoeffsError::Parse { line, message };
        let mut method = None;
        let mut header_seen = false;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(value) = rest.trim().strip_prefix("method:") {
                    method = Some(
                        value
                            .trim()
                            .parse::<TriangleMethod>()
                            .map_err(|e| err(line_no, e))?,
                    );
                }
                continue;
            }
            if !header_seen {
                if line != "m,l,numerator,denominator" {
                    return Err(err(line_no, format!("expected header, got {line:?}")));
                }
                header_seen = true;
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 4 {
                return Err(err(line_no, format!("expected 4 fields, got {}", fields.len())));
            }
            let m: usize = fields[0]
                .parse()
                .map_err(|_| err(line_no, format!("bad m field {:?}", fields[0])))?;
            let l: usize = fields[1]
                .parse()
                .map_err(|_| err(line_no, format!("bad l field {:?}", fields[1])))?;
            let value = parse_frac(&format!("{}/{}", fields[2], fields[3]))
                .map_err(|e| err(line_no, e.to_string()))?;
            if m == rows.len() && l == 0 {
                rows.push(Vec::with_capacity(m + 1));
            }
            if m + 1 != rows.len() || l != rows[m].len() {
                return Err(err(line_no, format!("entry ({m},{l}) out of order")));
            }
            rows[m].push(value);
        }
        let method = method
            .ok_or_else(|| err(0, "missing `# method:` comment".to_string()))?;
        Triangle::from_rows(method, rows)
    }

    /// JSON export: `{"method": ..., "m_max": ..., "rows": [["num/den", ...], ...]}`.
    pub fn to_json(&self) -> String {
        let file = TriangleFile {
            method: self.method.to_string(),
            m_max: self.max_m(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(fmt_frac).collect())
                .collect(),
        };
        serde_json::to_string(&file).expect("triangle serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Triangle, CoeffsError> {
        let err = |message: String| CoeffsError::Parse { line: 1, message };
        let file: TriangleFile =
            serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
        let method = file.method.parse::<TriangleMethod>().map_err(err)?;
        let mut rows = Vec::with_capacity(file.rows.len());
        for row in &file.rows {
            let mut parsed = Vec::with_capacity(row.len());
            for s in row {
                parsed.push(parse_frac(s).map_err(|e| err(e.to_string()))?);
            }
            rows.push(parsed);
        }
        if file.m_max + 1 != rows.len() {
            return Err(err(format!(
                "m_max {} inconsistent with {} rows",
                file.m_max,
                rows.len()
            )));
        }
        Triangle::from_rows(method, rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TriangleFile {
    method: String,
    m_max: usize,
    rows: Vec<Vec<String>>,
}

/// Verifies both mixed recurrences on every adjacent row pair of the
/// triangle, under the convention that `d_l` vanishes outside `0 <= l <= m`:
///
/// ```text
/// (rec A)  2(m+1) d_l(m+1) = 2(m+l) d_{l-1}(m) + (4m+2l+3) d_l(m)
/// (rec B)  2(m+1)(m+1-l) d_l(m+1) = (4m-2l+3)(m+l+1) d_l(m) - 2l(l+1) d_{l+1}(m)
/// ```
///
/// Failures are reported with their `(m, l)` witness; identities are checked
/// for `0 <= l <= m+1`.
pub fn check_mixed_recurrences(tri: &Triangle) -> CheckReport {
    let max_m = tri.max_m();
    let instances: Vec<Instance> = (0..max_m)
        .flat_map(|m| mixed_recurrence_instances(tri, m))
        .collect();
    CheckReport::from_instances(
        "mixed_rec",
        format!("m in 0..={}, l in 0..=m+1, both mixed recurrences", max_m.saturating_sub(1)),
        instances,
    )
}

/// The per-row-pair instances behind [`check_mixed_recurrences`]; `m` is the
/// lower row of the pair (requires row `m+1`).
pub fn mixed_recurrence_instances(tri: &Triangle, m: usize) -> Vec<Instance> {
    let mi = m as i64;
    let mut out = Vec::with_capacity(2 * (m + 2));
    for l in 0..=mi + 1 {
        let up = tri.entry_or_zero(m + 1, l);
        let here = tri.entry_or_zero(m, l);
        let left = tri.entry_or_zero(m, l - 1);
        let right = tri.entry_or_zero(m, l + 1);

        let lhs_a = rat_int(2 * (mi + 1)) * &up;
        let rhs_a = rat_int(2 * (mi + l)) * &left + rat_int(4 * mi + 2 * l + 3) * &here;
        out.push(identity_instance(m, l, lhs_a, rhs_a, "rec A"));

        let lhs_b = rat_int(2 * (mi + 1) * (mi + 1 - l)) * &up;
        let rhs_b =
            rat_int((4 * mi - 2 * l + 3) * (mi + l + 1)) * &here - rat_int(2 * l * (l + 1)) * &right;
        out.push(identity_instance(m, l, lhs_b, rhs_b, "rec B"));
    }
    out
}

fn identity_instance(m: usize, l: i64, lhs: Rat, rhs: Rat, which: &str) -> Instance {
    let outcome = if lhs == rhs {
        Outcome::StrictPass
    } else {
        Outcome::Fail
    };
    Instance::new(m, Some(l), outcome, lhs, rhs, which)
}
