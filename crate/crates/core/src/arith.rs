//! Exact number kernel: arbitrary-precision rationals and quadratic surds.
//!
//! Every verdict in this crate is decided on values of the form `p + q*sqrt(t)`
//! with `p`, `q`, `t` rational and `t >= 0`. Comparison against a rational is
//! done by sign-aware squaring, so no floating point ever enters a verdict.
//! Rational bracketing of a surd exists only for report display.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// The universal exact number type: arbitrary-precision rational in lowest
/// terms with positive denominator (canonical form is maintained by
/// `num-rational` on every operation).
pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand: {0}")]
    NegativeRadicand(String),
    #[error("invalid rational literal: {0:?}")]
    ParseRational(String),
}

/// Shorthand constructor: `rat(n, d)` is the canonical form of `n/d`.
///
/// Panics if `d == 0`; use [`checked_div`] when the denominator is data.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact division with an explicit error on a zero divisor.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a / b)
}

/// Renders a rational as `numerator/denominator` with both parts written out,
/// e.g. `3/2` and `1/1`. This is the wire format used in every export.
pub fn fmt_frac(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `numerator/denominator` wire format (a bare integer is also
/// accepted and read as `n/1`).
pub fn parse_frac(s: &str) -> Result<Rat, ArithError> {
    let bad = || ArithError::ParseRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(Rat::new(n, d))
}

/// Floor of the square root of a nonnegative rational's numerator/denominator
/// pair is not well-defined as a rational; instead, report whether `r` is the
/// square of a rational and return that square root if so.
fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// A value `p + q*sqrt(t)` with `p`, `q`, `t` rational and `t >= 0`.
///
/// The radicand is kept rational; every comparison squares at most once, so
/// nested radicals never arise. Two surds with different field values may
/// denote the same number (e.g. `0 + 1*sqrt(4)` and `2 + 0*sqrt(0)`); value
/// comparisons go through [`QuadraticSurd::cmp_rational`], never through
/// field equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    p: Rat,
    q: Rat,
    t: Rat,
}

impl QuadraticSurd {
    /// Builds `p + q*sqrt(t)`, rejecting a negative radicand.
    pub fn new(p: Rat, q: Rat, t: Rat) -> Result<Self, ArithError> {
        if t.is_negative() {
            return Err(ArithError::NegativeRadicand(fmt_frac(&t)));
        }
        Ok(QuadraticSurd { p, q, t })
    }

    /// A plain rational viewed as a surd with zero radical part.
    pub fn from_rational(p: Rat) -> Self {
        QuadraticSurd {
            p,
            q: Rat::zero(),
            t: Rat::zero(),
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.p
    }

    pub fn radical_coeff(&self) -> &Rat {
        &self.q
    }

    pub fn radicand(&self) -> &Rat {
        &self.t
    }

    /// The exact rational value, when the surd happens to be rational
    /// (zero radical part, or a radicand that is a perfect rational square).
    pub fn as_exact_rational(&self) -> Option<Rat> {
        if self.q.is_zero() || self.t.is_zero() {
            return Some(self.p.clone());
        }
        exact_sqrt(&self.t).map(|s| &self.p + &self.q * s)
    }

    /// Folds a perfect-square radicand into the rational part. Comparison
    /// results are identical with or without this.
    pub fn normalized(&self) -> QuadraticSurd {
        match self.as_exact_rational() {
            Some(r) => QuadraticSurd::from_rational(r),
            None => self.clone(),
        }
    }

    /// Exact trichotomy of `p + q*sqrt(t)` versus the rational `r`.
    ///
    /// Let `delta = p - r`. When `delta` and `q` carry the same sign the
    /// answer is that sign; otherwise `delta^2` is compared against `q^2 * t`
    /// and the sign of the dominant side wins. `Equal` is returned exactly
    /// when `delta^2 == q^2 * t` with opposite signs (or both sides vanish).
    pub fn cmp_rational(&self, r: &Rat) -> Ordering {
        let delta = &self.p - r;
        if self.q.is_zero() || self.t.is_zero() {
            return delta.cmp(&Rat::zero());
        }
        let ds = sign_of(&delta);
        let qs = sign_of(&self.q);
        // t > 0 and q != 0 from here on.
        match (ds, qs) {
            (Sign::NoSign, s) | (s, Sign::NoSign) => sign_to_ordering(s),
            (Sign::Plus, Sign::Plus) => Ordering::Greater,
            (Sign::Minus, Sign::Minus) => Ordering::Less,
            // Opposite signs: square both magnitudes.
            _ => {
                let lhs = &delta * &delta;
                let rhs = &self.q * &self.q * &self.t;
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sign_to_ordering(ds),
                    Ordering::Less => sign_to_ordering(qs),
                }
            }
        }
    }

    /// A rational interval `[lo, hi]` containing the surd with
    /// `hi - lo <= 2^-bits`, computed by bisection on the radical.
    /// Display-only: verdicts never consult brackets.
    pub fn bracket(&self, bits: u32) -> (Rat, Rat) {
        if self.q.is_zero() || self.t.is_zero() {
            return (self.p.clone(), self.p.clone());
        }
        let one = Rat::one();
        let (mut a, mut b) = if self.t >= one {
            (one, self.t.clone())
        } else {
            (self.t.clone(), Rat::one())
        };
        let qabs = self.q.abs();
        let target = Rat::new(BigInt::one(), BigInt::from(2).pow(bits)) / &qabs;
        while &b - &a > target {
            let mid = (&a + &b) / rat_int(2);
            if &mid * &mid <= self.t {
                a = mid;
            } else {
                b = mid;
            }
        }
        let lo = &self.p + &self.q * if self.q.is_positive() { &a } else { &b };
        let hi = &self.p + &self.q * if self.q.is_positive() { &b } else { &a };
        (lo, hi)
    }

    /// Decimal rendering of the midpoint of a 64-bit bracket, for human
    /// display columns only.
    pub fn approx_decimal(&self, digits: usize) -> String {
        let (lo, hi) = self.bracket(64);
        let mid = (lo + hi) / rat_int(2);
        rat_to_decimal(&mid, digits)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            fmt_frac(&self.p),
            fmt_frac(&self.q),
            fmt_frac(&self.t)
        )
    }
}

fn sign_of(r: &Rat) -> Sign {
    r.numer().sign()
}

fn sign_to_ordering(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Truncated decimal expansion of a rational, for display columns flagged as
/// approximate. Never used in a verdict.
pub fn rat_to_decimal(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let int = a.to_integer();
    let mut frac = &a - Rat::from_integer(int.clone());
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if digits > 0 {
        out.push('.');
        for _ in 0..digits {
            frac *= rat_int(10);
            let d = frac.to_integer();
            out.push_str(&d.to_string());
            frac -= Rat::from_integer(d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surd(p: Rat, q: Rat, t: Rat) -> QuadraticSurd {
        QuadraticSurd::new(p, q, t).unwrap()
    }

    #[test]
    fn rational_ops_are_exact_and_canonical() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(3, 4) - rat(3, 4), rat(0, 1));
        assert_eq!(
            checked_div(&rat(43, 4), &rat(15, 4)).unwrap(),
            rat(43, 15)
        );
        assert!(matches!(
            checked_div(&rat(1, 2), &rat_int(0)),
            Err(ArithError::DivisionByZero)
        ));
        // canonical form: reduced, positive denominator
        let v = Rat::new(BigInt::from(-6), BigInt::from(-8));
        assert_eq!(v, rat(3, 4));
        assert_eq!(fmt_frac(&v), "3/4");
    }

    #[test]
    fn frac_wire_format_round_trips() {
        assert_eq!(fmt_frac(&rat_int(1)), "1/1");
        assert_eq!(parse_frac("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_frac("7").unwrap(), rat_int(7));
        assert_eq!(parse_frac("-21/8").unwrap(), rat(-21, 8));
        assert!(parse_frac("x/2").is_err());
        assert!(parse_frac("1/0").is_err());
    }

    #[test]
    fn surd_cmp_examples() {
        // 31/12 + (1/12)*sqrt(9) == 17/6
        let s = surd(rat(31, 12), rat(1, 12), rat_int(9));
        assert_eq!(s.cmp_rational(&rat(17, 6)), Ordering::Equal);
        // 1 + sqrt(2) > 2
        let s = surd(rat_int(1), rat_int(1), rat_int(2));
        assert_eq!(s.cmp_rational(&rat_int(2)), Ordering::Greater);
        // L(2,1) = 17/6 < 43/15
        let s = surd(rat(31, 12), rat(1, 12), rat_int(9));
        assert_eq!(s.cmp_rational(&rat(43, 15)), Ordering::Less);
    }

    #[test]
    fn surd_cmp_sign_branches() {
        // delta and q both negative
        let s = surd(rat_int(0), rat_int(-1), rat_int(2));
        assert_eq!(s.cmp_rational(&rat_int(1)), Ordering::Less);
        // delta positive, q negative, delta dominant: 3 - sqrt(2) vs 1
        let s = surd(rat_int(3), rat_int(-1), rat_int(2));
        assert_eq!(s.cmp_rational(&rat_int(1)), Ordering::Greater);
        // delta positive, q negative, radical dominant: 1 - sqrt(2) vs 0
        let s = surd(rat_int(1), rat_int(-1), rat_int(2));
        assert_eq!(s.cmp_rational(&rat_int(0)), Ordering::Less);
        // delta zero, q nonzero
        let s = surd(rat_int(5), rat_int(1), rat_int(3));
        assert_eq!(s.cmp_rational(&rat_int(5)), Ordering::Greater);
        // equality through squaring: 2 - sqrt(4) vs 0
        let s = surd(rat_int(2), rat_int(-1), rat_int(4));
        assert_eq!(s.cmp_rational(&rat_int(0)), Ordering::Equal);
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(matches!(
            QuadraticSurd::new(rat_int(0), rat_int(1), rat_int(-1)),
            Err(ArithError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn exact_rational_detection() {
        let s = surd(rat(31, 12), rat(1, 12), rat_int(9));
        assert_eq!(s.as_exact_rational().unwrap(), rat(17, 6));
        let s = surd(rat_int(0), rat_int(1), rat(4, 9));
        assert_eq!(s.as_exact_rational().unwrap(), rat(2, 3));
        let s = surd(rat_int(0), rat_int(1), rat_int(2));
        assert!(s.as_exact_rational().is_none());
        assert_eq!(s.normalized(), s);
    }

    /// Independent bracket oracle: digit-by-digit square root via integer
    /// sqrt of the scaled radicand, entirely separate from the bisection.
    fn sqrt_bracket_oracle(t: &Rat, bits: u32) -> (Rat, Rat) {
        // sqrt(u/v) = sqrt(u*v)/v; scale by 4^bits so the integer sqrt
        // carries `bits` binary digits past the point.
        let scale = BigInt::from(4).pow(bits);
        let s = (t.numer() * t.denom() * &scale).sqrt();
        let den = t.denom() * BigInt::from(2).pow(bits);
        (
            Rat::new(s.clone(), den.clone()),
            Rat::new(s + BigInt::one(), den),
        )
    }

    #[test]
    fn bracket_examples() {
        let s = surd(rat_int(0), rat_int(1), rat_int(4));
        let (lo, hi) = s.bracket(8);
        assert!(lo <= rat_int(2) && rat_int(2) <= hi);
        assert!(&hi - &lo <= rat(1, 256));

        let s = surd(rat_int(1), rat_int(0), rat_int(7));
        assert_eq!(s.bracket(4), (rat_int(1), rat_int(1)));

        let s = surd(rat_int(0), rat_int(1), rat_int(2));
        let (lo, hi) = s.bracket(10);
        assert!(&hi - &lo <= rat(1, 1024));
        let (olo, ohi) = sqrt_bracket_oracle(&rat_int(2), 20);
        // the true value lies in the oracle interval; our bracket must contain it
        assert!(lo <= ohi && olo <= hi);
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-200i64..200, 1i64..40).prop_map(|(n, d)| rat(n, d))
    }

    fn small_nonneg_rat() -> impl Strategy<Value = Rat> {
        (0i64..200, 1i64..40).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn zero_radical_agrees_with_rational_cmp(
            a in small_rat(), b in small_rat(), t in small_nonneg_rat()
        ) {
            let s = surd(a.clone(), rat_int(0), t);
            prop_assert_eq!(s.cmp_rational(&b), a.cmp(&b));
        }

        #[test]
        fn mirror_flips_comparison(
            p in small_rat(), q in small_rat(), t in small_nonneg_rat(), r in small_rat()
        ) {
            // reflecting the surd across r negates the comparison
            let s = surd(p.clone(), q.clone(), t.clone());
            let mirrored = surd(&r + &r - p, -q, t);
            prop_assert_eq!(s.cmp_rational(&r), mirrored.cmp_rational(&r).reverse());
        }

        #[test]
        fn equal_implies_square_identity(
            p in small_rat(), q in small_rat(), t in small_nonneg_rat(), r in small_rat()
        ) {
            let s = surd(p.clone(), q.clone(), t.clone());
            if s.cmp_rational(&r) == Ordering::Equal {
                let delta = &p - &r;
                prop_assert_eq!(&delta * &delta, &q * &q * &t);
            }
        }

        #[test]
        fn bracket_consistent_with_cmp(
            p in small_rat(), q in small_rat(), t in small_nonneg_rat(), r in small_rat()
        ) {
            let s = surd(p, q, t);
            let (lo, hi) = s.bracket(40);
            prop_assert!(&hi - &lo <= rat(1, 1 << 40));
            match s.cmp_rational(&r) {
                Ordering::Greater => prop_assert!(hi > r),
                Ordering::Less => prop_assert!(lo < r),
                Ordering::Equal => prop_assert!(lo <= r && r <= hi),
            }
        }

        #[test]
        fn normalization_preserves_comparisons(
            p in small_rat(), q in small_rat(), root in 0i64..20, r in small_rat()
        ) {
            let s = surd(p, q, rat_int(root * root));
            prop_assert_eq!(s.normalized().cmp_rational(&r), s.cmp_rational(&r));
        }
    }
}
