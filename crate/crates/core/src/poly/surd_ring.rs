//! Quotient-ring arithmetic for expressions involving two formal square
//! roots `U` and `V` with polynomial squares: elements have the shape
//! `c1 + cU*U + cV*V + cUV*U*V` with [`MultiPoly`] coefficients, and
//! multiplication reduces `U^2` and `V^2` to the ring's defining
//! polynomials. Equality of reduced elements is componentwise, which gives
//! exact identity checking for radical-valued expressions.

use super::{MultiPoly, Point};
use crate::arith::Rat;
use num_traits::Zero;
use std::fmt;

/// The ring `Q[m,l,n,t,s][U,V] / (U^2 - usq, V^2 - vsq)`.
#[derive(Clone, Debug)]
pub struct SurdRing {
    usq: MultiPoly,
    vsq: MultiPoly,
}

/// A reduced element `c1 + cu*U + cv*V + cuv*U*V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdRingElem {
    pub c1: MultiPoly,
    pub cu: MultiPoly,
    pub cv: MultiPoly,
    pub cuv: MultiPoly,
}

impl SurdRing {
    pub fn new(usq: MultiPoly, vsq: MultiPoly) -> Self {
        SurdRing { usq, vsq }
    }

    pub fn usq(&self) -> &MultiPoly {
        &self.usq
    }

    pub fn vsq(&self) -> &MultiPoly {
        &self.vsq
    }

    /// Product with reduction of `U^2 -> usq`, `V^2 -> vsq`.
    pub fn mul(&self, a: &SurdRingElem, b: &SurdRingElem) -> SurdRingElem {
        let u = &self.usq;
        let v = &self.vsq;
        let uv = u * v;
        SurdRingElem {
            c1: &a.c1 * &b.c1
                + (&a.cu * &b.cu) * u
                + (&a.cv * &b.cv) * v
                + (&a.cuv * &b.cuv) * &uv,
            cu: &a.c1 * &b.cu + &a.cu * &b.c1 + (&a.cv * &b.cuv + &a.cuv * &b.cv) * v,
            cv: &a.c1 * &b.cv + &a.cv * &b.c1 + (&a.cu * &b.cuv + &a.cuv * &b.cu) * u,
            cuv: &a.c1 * &b.cuv + &a.cuv * &b.c1 + &a.cu * &b.cv + &a.cv * &b.cu,
        }
    }

    pub fn square(&self, a: &SurdRingElem) -> SurdRingElem {
        self.mul(a, a)
    }
}

impl SurdRingElem {
    pub fn zero() -> Self {
        SurdRingElem {
            c1: MultiPoly::zero(),
            cu: MultiPoly::zero(),
            cv: MultiPoly::zero(),
            cuv: MultiPoly::zero(),
        }
    }

    /// Embed a plain polynomial.
    pub fn from_poly(p: MultiPoly) -> Self {
        SurdRingElem {
            c1: p,
            ..SurdRingElem::zero()
        }
    }

    /// `p*U`.
    pub fn u_times(p: MultiPoly) -> Self {
        SurdRingElem {
            cu: p,
            ..SurdRingElem::zero()
        }
    }

    /// `p*V`.
    pub fn v_times(p: MultiPoly) -> Self {
        SurdRingElem {
            cv: p,
            ..SurdRingElem::zero()
        }
    }

    /// `p*U*V`.
    pub fn uv_times(p: MultiPoly) -> Self {
        SurdRingElem {
            cuv: p,
            ..SurdRingElem::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.cu.is_zero() && self.cv.is_zero() && self.cuv.is_zero()
    }

    /// Total stored term count across the four components.
    pub fn term_count(&self) -> usize {
        self.c1.term_count() + self.cu.term_count() + self.cv.term_count() + self.cuv.term_count()
    }

    pub fn add(&self, other: &SurdRingElem) -> SurdRingElem {
        SurdRingElem {
            c1: &self.c1 + &other.c1,
            cu: &self.cu + &other.cu,
            cv: &self.cv + &other.cv,
            cuv: &self.cuv + &other.cuv,
        }
    }

    pub fn sub(&self, other: &SurdRingElem) -> SurdRingElem {
        SurdRingElem {
            c1: &self.c1 - &other.c1,
            cu: &self.cu - &other.cu,
            cv: &self.cv - &other.cv,
            cuv: &self.cuv - &other.cuv,
        }
    }

    pub fn neg(&self) -> SurdRingElem {
        SurdRingElem::zero().sub(self)
    }
}

impl fmt::Display for SurdRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (c, label) in [
            (&self.c1, None),
            (&self.cu, Some("U")),
            (&self.cv, Some("V")),
            (&self.cuv, Some("U*V")),
        ] {
            if c.is_zero() {
                continue;
            }
            match label {
                None => parts.push(format!("({c})")),
                Some(sym) => parts.push(format!("({c})*{sym}")),
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Rational interval `[lo, hi]` used only by tests and diagnostics to check
/// that reduced symbolic arithmetic is numerically sound.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        if c >= &Rat::zero() {
            Interval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        } else {
            Interval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Enclosing interval for the value of `elem` at `point`, bracketing each
/// radical to `bits` bits. The ring's `usq`, `vsq` must evaluate to
/// nonnegative rationals at the point.
pub fn enclose(ring: &SurdRing, elem: &SurdRingElem, point: &Point, bits: u32) -> Interval {
    let u_val = ring.usq.eval(point);
    let v_val = ring.vsq.eval(point);
    let sqrt_u = crate::arith::QuadraticSurd::new(Rat::zero(), num_traits::One::one(), u_val)
        .expect("usq must be nonnegative at the sample point");
    let sqrt_v = crate::arith::QuadraticSurd::new(Rat::zero(), num_traits::One::one(), v_val)
        .expect("vsq must be nonnegative at the sample point");
    let (ul, uh) = sqrt_u.bracket(bits);
    let (vl, vh) = sqrt_v.bracket(bits);
    let iu = Interval { lo: ul, hi: uh };
    let iv = Interval { lo: vl, hi: vh };
    let iuv = iu.mul(&iv);
    Interval::point(elem.c1.eval(point))
        .add(&iu.scale(&elem.cu.eval(point)))
        .add(&iv.scale(&elem.cv.eval(point)))
        .add(&iuv.scale(&elem.cuv.eval(point)))
}
