//! Exact multivariate polynomial engine over the fixed variable set
//! `{m, l, n, t, s}`, with a quotient-ring extension for the surd symbols
//! `U`, `V` ([`surd_ring`]).
//!
//! This engine replays the symbolic side of the verification: the named
//! polynomial registry ([`registry`]), the identity suite ([`identities`]),
//! and shift-substitution positivity certificates ([`certify`]). Everything
//! is plain expand-and-compare — no factorization, no Gröbner machinery —
//! because polynomial identity checking over an integral domain needs
//! nothing more.

pub mod certify;
pub mod identities;
pub mod registry;
pub mod surd_ring;

use crate::arith::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown registry name {name:?}; available: {available}")]
    UnknownName { name: String, available: String },
}

/// Number of ring variables; every exponent vector has this arity.
pub const ARITY: usize = 5;

/// The ring variables in their fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    M,
    L,
    N,
    T,
    S,
}

impl Var {
    pub const ALL: [Var; ARITY] = [Var::M, Var::L, Var::N, Var::T, Var::S];

    pub fn index(self) -> usize {
        match self {
            Var::M => 0,
            Var::L => 1,
            Var::N => 2,
            Var::T => 3,
            Var::S => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::M => "m",
            Var::L => "l",
            Var::N => "n",
            Var::T => "t",
            Var::S => "s",
        }
    }
}

/// Exponent vector, indexed by [`Var::index`].
pub type Exps = [u16; ARITY];

/// An evaluation point assigning a rational to every variable.
pub type Point = [Rat; ARITY];

/// Point with `m`, `l` set and the remaining variables zero.
pub fn point_ml(m: i64, l: i64) -> Point {
    let mut p = zero_point();
    p[Var::M.index()] = crate::arith::rat_int(m);
    p[Var::L.index()] = crate::arith::rat_int(l);
    p
}

/// Point with `m`, `n` set and the remaining variables zero.
pub fn point_mn(m: i64, n: i64) -> Point {
    let mut p = zero_point();
    p[Var::M.index()] = crate::arith::rat_int(m);
    p[Var::N.index()] = crate::arith::rat_int(n);
    p
}

/// Point with only `m` set.
pub fn point_m(m: i64) -> Point {
    let mut p = zero_point();
    p[Var::M.index()] = crate::arith::rat_int(m);
    p
}

pub fn zero_point() -> Point {
    std::array::from_fn(|_| Rat::zero())
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficient is ever stored, so structural equality is
/// exact polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; ARITY], c);
        p
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::constant(crate::arith::rat_int(c))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Rat::one(), &[(v, 1)])
    }

    pub fn monomial(c: Rat, vars: &[(Var, u32)]) -> Self {
        let mut e = [0u16; ARITY];
        for &(v, exp) in vars {
            e[v.index()] += exp as u16;
        }
        let mut p = MultiPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|e| e[v.index()] as u32)
            .max()
            .unwrap_or(0)
    }

    /// The coefficient of the constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&[0; ARITY]).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, e: Exps, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x = x.checked_add(*y).expect("exponent overflow");
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, coeff) in &self.terms {
            out.add_term(*e, coeff * c);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..exp {
            out = out.mul_ref(self);
        }
        out
    }

    /// Exact substitution `v := expr`, re-collected (Horner over the
    /// exponents of `v` actually present).
    pub fn subst(&self, v: Var, expr: &MultiPoly) -> MultiPoly {
        let i = v.index();
        let mut buckets: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let exp = rest[i];
            rest[i] = 0;
            buckets.entry(exp).or_default().add_term(rest, c.clone());
        }
        let mut result = MultiPoly::zero();
        let mut prev: Option<u16> = None;
        for (exp, part) in buckets.into_iter().rev() {
            result = match prev {
                None => part,
                Some(p) => result.mul_ref(&expr.pow((p - exp) as u32)).add_ref(&part),
            };
            prev = Some(exp);
        }
        if let Some(last) = prev {
            if last > 0 {
                result = result.mul_ref(&expr.pow(last as u32));
            }
        }
        result
    }

    /// Exact evaluation at a full point.
    pub fn eval(&self, point: &Point) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Terms in graded-lexicographic order (display order; verdicts never
    /// depend on term order).
    fn display_order(&self) -> Vec<(&Exps, &Rat)> {
        let mut terms: Vec<(&Exps, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| {
            let deg: u32 = e.iter().map(|&x| x as u32).sum();
            std::cmp::Reverse((deg, **e))
        });
        terms
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                factors.push(if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (vi, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    factors.push(Var::ALL[vi].name().to_string());
                } else if exp > 1 {
                    factors.push(format!("{}^{}", Var::ALL[vi].name(), exp));
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop_impls {
    ($trait:ident, $method:ident, $delegate:ident) => {
        impl std::ops::$trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$delegate(rhs)
            }
        }
        impl std::ops::$trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$delegate(&rhs)
            }
        }
        impl std::ops::$trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$delegate(rhs)
            }
        }
        impl std::ops::$trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$delegate(&rhs)
            }
        }
    };
}

binop_impls!(Add, add, add_ref);
binop_impls!(Sub, sub, sub_ref);
binop_impls!(Mul, mul, mul_ref);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::zero().sub_ref(self)
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::zero().sub_ref(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use proptest::prelude::*;

    fn m() -> MultiPoly {
        MultiPoly::var(Var::M)
    }
    fn l() -> MultiPoly {
        MultiPoly::var(Var::L)
    }
    fn c(x: i64) -> MultiPoly {
        MultiPoly::int(x)
    }

    #[test]
    fn arithmetic_examples() {
        // (m+1)(m-1) = m^2 - 1
        let p = (m() + c(1)) * (m() - c(1));
        assert_eq!(p, m().pow(2) - c(1));
        // (m+l) - (m+l) = 0, and nothing is stored
        let q = (m() + l()) - (m() + l());
        assert!(q.is_zero());
        assert_eq!(q.term_count(), 0);
        // (m+l+1)(m-l+1) = m^2 + 2m - l^2 + 1
        let r = (m() + l() + c(1)) * (m() - l() + c(1));
        assert_eq!(r, m().pow(2) + c(2) * m() - l().pow(2) + c(1));
    }

    #[test]
    fn subst_examples() {
        let shift = l() + c(1) + MultiPoly::var(Var::T);
        assert_eq!(
            (m() - l()).subst(Var::M, &shift),
            c(1) + MultiPoly::var(Var::T)
        );
        assert_eq!(m().pow(2).subst(Var::M, &m()), m().pow(2));
        assert_eq!(
            (c(4) * m() + c(3)).subst(Var::M, &shift),
            c(4) * l() + c(4) * MultiPoly::var(Var::T) + c(7)
        );
        // substitution into a polynomial not involving the variable is identity
        assert_eq!(l().pow(3).subst(Var::M, &c(100)), l().pow(3));
    }

    #[test]
    fn eval_and_degrees() {
        let p = (m() + l() + c(1)) * (m() - l() + c(1));
        assert_eq!(p.eval(&point_ml(2, 1)), rat_int(8));
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.degree_in(Var::M), 2);
        assert_eq!(p.degree_in(Var::N), 0);
        let half = MultiPoly::constant(rat(1, 2)) * m();
        assert_eq!(half.eval(&point_ml(7, 0)), rat(7, 2));
        assert_eq!(MultiPoly::zero().eval(&point_ml(3, 3)), rat_int(0));
    }

    #[test]
    fn display_graded_lex() {
        let p = c(4) * m().pow(2) * l() + c(3) * m() - c(5);
        assert_eq!(p.to_string(), "4*m^2*l + 3*m - 5");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((-m()).to_string(), "-m");
        let q = MultiPoly::constant(rat(3, 2)) * m() - l();
        assert_eq!(q.to_string(), "3/2*m - l");
    }

    #[test]
    fn pow_edge_cases() {
        assert_eq!(m().pow(0), MultiPoly::one());
        let cube = (m() + c(1)).pow(3);
        assert_eq!(
            cube,
            m().pow(3) + c(3) * m().pow(2) + c(3) * m() + c(1)
        );
        assert!(MultiPoly::zero().pow(2).is_zero());
    }

    /// Bounded random polynomials in m and l for ring-axiom property tests.
    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u16..4, 0u16..4), -5i64..6), 0..5).prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for ((em, el), c) in terms {
                let mut e = [0u16; ARITY];
                e[Var::M.index()] = em;
                e[Var::L.index()] = el;
                p.add_term(e, rat_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), d in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &d, &a + (&b + &d));
            prop_assert_eq!((&a * &b) * &d, &a * (&b * &d));
            prop_assert_eq!(&a * (&b + &d), &a * &b + &a * &d);
            prop_assert_eq!(&a - &a, MultiPoly::zero());
            prop_assert_eq!(&a * MultiPoly::one(), a.clone());
        }

        #[test]
        fn subst_commutes_with_eval(
            a in small_poly(), mv in -6i64..7, lv in -6i64..7
        ) {
            // substituting m := l+1+t and evaluating agrees with evaluating
            // the original at the shifted point
            let shift = MultiPoly::var(Var::L) + MultiPoly::int(1) + MultiPoly::var(Var::T);
            let shifted = a.subst(Var::M, &shift);
            let mut point = point_ml(mv, lv);
            point[Var::T.index()] = rat_int(mv) - rat_int(lv) - rat_int(1);
            let direct = a.eval(&point_ml(mv, lv));
            prop_assert_eq!(shifted.eval(&point), direct);
        }
    }
}
