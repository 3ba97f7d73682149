//! Exact arithmetic for the computable fragment of the Puiseux-series
//! field: finite sums `sum c_i * t^(g_i)` with rational coefficients and
//! strictly increasing rational exponents, where `t` is a positive
//! infinitesimal.
//!
//! The order is determined by the leading (lowest-exponent) term: `x < y`
//! iff the leading coefficient of `y - x` is positive. The valuation `v`
//! reads off the least exponent, and the standard part `pi` the
//! coefficient at exponent zero.
//!
//! ```
//! use puiseux_measure::puiseux::PuiseuxScalar;
//! use puiseux_measure::rat::rint;
//!
//! let t = PuiseuxScalar::t();
//! let two = PuiseuxScalar::constant(rint(2));
//! assert!(t < two); // t is infinitesimal
//! assert!(PuiseuxScalar::zero() < t); // but positive
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::interval::RatInterval;
use crate::rat::{self, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// The valuation is negative, so there is no standard part.
    #[error("scalar has negative valuation, standard part undefined")]
    NotFinite,
    /// Rational powers apply to single-term scalars with positive coefficient.
    #[error("rational powers need a single positive term")]
    NotMonomial,
    /// Division is exact only by single-term divisors.
    #[error("division by a non-monomial scalar")]
    InexactDivision,
}

/// The valuation of a scalar: its least exponent, or infinity for zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    Finite(Rat),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Valuation::Finite(r) => Some(r),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// `v(xy) = v(x) + v(y)`.
    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(r) => write!(f, "{}", rat::render(r)),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite Puiseux polynomial in canonical form: terms `(exponent,
/// coefficient)` sorted by strictly increasing exponent, no zero
/// coefficients. The empty list is zero. Equality is term-list equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxScalar {
    terms: Vec<(Rat, Rat)>,
}

impl PuiseuxScalar {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::from_integer(1.into()))
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::monomial(Rat::from_integer(1.into()), Rat::from_integer(1.into()))
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, Rat::zero())
    }

    /// The single-term scalar `c * t^e` (zero when `c = 0`).
    pub fn monomial(c: Rat, e: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// Builds a scalar from arbitrary `(exponent, coefficient)` pairs,
    /// collecting like terms and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Rat, Rat)>>(terms: I) -> Self {
        let mut v: Vec<(Rat, Rat)> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 = &last.1 + &c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((e, c));
            }
        }
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Rat, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term: the one with the least exponent.
    pub fn leading(&self) -> Option<(&Rat, &Rat)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    /// Single-term view, if the scalar is a monomial.
    pub fn as_monomial(&self) -> Option<(&Rat, &Rat)> {
        if self.terms.len() == 1 {
            self.leading()
        } else {
            None
        }
    }

    /// The least exponent, or infinity for zero.
    pub fn valuation(&self) -> Valuation {
        match self.leading() {
            Some((e, _)) => Valuation::Finite(e.clone()),
            None => Valuation::Infinite,
        }
    }

    /// The coefficient at exponent zero, defined when `v(x) >= 0`.
    pub fn standard_part(&self) -> Result<Rat, ScalarError> {
        match self.leading() {
            None => Ok(Rat::zero()),
            Some((e, _)) if e.is_negative() => Err(ScalarError::NotFinite),
            _ => Ok(self.coeff_at(&Rat::zero())),
        }
    }

    pub fn coeff_at(&self, e: &Rat) -> Rat {
        self.terms
            .iter()
            .find(|(te, _)| te == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.leading(), Some((_, c)) if c.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        matches!(self.leading(), Some((_, c)) if c.is_negative())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Multiplies by a plain rational.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, q)| (e.clone(), q * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * t^e`.
    pub fn mul_monomial(&self, c: &Rat, e: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(te, q)| (te + e, q * c))
                .collect(),
        }
    }

    /// Exact division by a single-term divisor.
    pub fn div_monomial(&self, divisor: &Self) -> Result<Self, ScalarError> {
        let (e, c) = divisor.as_monomial().ok_or(ScalarError::InexactDivision)?;
        Ok(self.mul_monomial(&c.recip(), &-e.clone()))
    }

    /// Exact integer power.
    pub fn pow_i64(&self, k: i64) -> Result<Self, ScalarError> {
        if k < 0 {
            let m = self.as_monomial().ok_or(ScalarError::InexactDivision)?;
            let inv = Self::monomial(m.1.recip(), -m.0.clone());
            return inv.pow_i64(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Rational power of a single-term scalar `c * t^g` with `c > 0`:
    /// exact when `c^q` is rational, otherwise a certified coefficient
    /// enclosure of width at most `tol`.
    pub fn monomial_power(&self, q: &Rat, tol: &Rat) -> Result<MonomialPower, ScalarError> {
        let (e, c) = self.as_monomial().ok_or(ScalarError::NotMonomial)?;
        if !c.is_positive() {
            return Err(ScalarError::NotMonomial);
        }
        let exponent = e * q;
        match rat::pow_exact(c, q) {
            Some(cq) => Ok(MonomialPower::Exact(Self::monomial(cq, exponent))),
            None => {
                let (lo, hi) = rat::pow_enclose(c, q, tol);
                Ok(MonomialPower::Enclosure {
                    coeff: RatInterval::new(lo, hi),
                    exponent,
                })
            }
        }
    }

    /// Conservative monomial bracket `[a * t^v, b * t^v]` around a
    /// positive scalar, with `v` its valuation. `slack` widens the side
    /// on which lower-order terms push the value past the leading
    /// coefficient.
    pub(crate) fn monomial_bracket(&self, slack: &Rat) -> (Rat, Rat, Rat) {
        let (e, c) = self.leading().expect("monomial_bracket of zero");
        debug_assert!(c.is_positive());
        let tail = self - &Self::monomial(c.clone(), e.clone());
        let (lo, hi) = if tail.is_zero() {
            (c.clone(), c.clone())
        } else if tail.is_positive() {
            (c.clone(), c + slack)
        } else {
            (c - slack, c.clone())
        };
        (lo, hi, e.clone())
    }
}

/// Result of raising a monomial to a rational power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialPower {
    Exact(PuiseuxScalar),
    Enclosure { coeff: RatInterval, exponent: Rat },
}

impl Add for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn add(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        PuiseuxScalar::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

impl Sub for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn sub(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        self + &(-rhs)
    }
}

impl Neg for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        PuiseuxScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn mul(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        PuiseuxScalar::from_terms(terms)
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for PuiseuxScalar {
            type Output = PuiseuxScalar;
            fn $method(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        -&self
    }
}

impl PartialOrd for PuiseuxScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PuiseuxScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = other - self;
        match diff.leading() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{}", rat::render(&mag))?;
                continue;
            }
            if !num_traits::One::is_one(&mag) {
                write!(f, "{}*", rat::render(&mag))?;
            }
            if num_traits::One::is_one(e) {
                write!(f, "t")?;
            } else if e.denom() == &num_bigint::BigInt::from(1) && !e.is_negative() {
                write!(f, "t^{}", e.numer())?;
            } else {
                write!(f, "t^({})", rat::render(e))?;
            }
        }
        Ok(())
    }
}

/// A scalar whose coefficients are certified rational intervals with
/// exact exponents. Used for corner evaluations that involve irrational
/// powers; degenerate intervals recover exact scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarEnclosure {
    /// Sorted by strictly increasing exponent.
    terms: Vec<(Rat, RatInterval)>,
}

impl ScalarEnclosure {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn exact(s: &PuiseuxScalar) -> Self {
        Self {
            terms: s
                .terms()
                .iter()
                .map(|(e, c)| (e.clone(), RatInterval::point(c.clone())))
                .collect(),
        }
    }

    pub fn monomial(coeff: RatInterval, exponent: Rat) -> Self {
        Self { terms: vec![(exponent, coeff)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rat, RatInterval)] {
        &self.terms
    }

    /// Exact scalar view when every coefficient interval is a point.
    pub fn as_exact(&self) -> Option<PuiseuxScalar> {
        if self.terms.iter().all(|(_, c)| c.is_point()) {
            Some(PuiseuxScalar::from_terms(
                self.terms.iter().map(|(e, c)| (e.clone(), c.lo().clone())),
            ))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms: Vec<(Rat, RatInterval)> = Vec::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            match terms.iter_mut().find(|(te, _)| te == e) {
                Some((_, acc)) => *acc = acc.add(c),
                None => terms.push((e.clone(), c.clone())),
            }
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        terms.retain(|(_, c)| !(c.is_point() && c.lo().is_zero()));
        Self { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for (e1, c1) in &self.terms {
            let partial = Self {
                terms: other
                    .terms
                    .iter()
                    .map(|(e2, c2)| (e1 + e2, c1.mul(c2)))
                    .collect(),
            };
            acc = acc.add(&partial);
        }
        acc
    }

    pub fn scale(&self, c: &RatInterval) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.clone(), q.mul(c)))
                .collect(),
        }
    }

    /// The valuation, certain when the leading coefficient excludes zero.
    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some((e, _)) => Valuation::Finite(e.clone()),
            None => Valuation::Infinite,
        }
    }

    /// True when the enclosed scalar is certainly positive.
    pub fn certainly_positive(&self) -> bool {
        matches!(self.terms.first(), Some((_, c)) if c.lo().is_positive())
    }

    /// Certified comparison against an exact scalar; `None` when the
    /// enclosure is too coarse to decide.
    pub fn cmp_scalar(&self, rhs: &PuiseuxScalar) -> Option<Ordering> {
        // Walk the merged term lists from the leading exponent; the first
        // exponent where the difference is certainly nonzero decides.
        let mut lhs_iter = self.terms.iter().peekable();
        let mut rhs_iter = rhs.terms().iter().peekable();
        loop {
            match (lhs_iter.peek(), rhs_iter.peek()) {
                (None, None) => return Some(Ordering::Equal),
                (Some((_, c)), None) => {
                    let c = (*c).clone();
                    return interval_sign(&c);
                }
                (None, Some((_, c))) => {
                    return Some(if c.is_positive() {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    });
                }
                (Some((le, lc)), Some((re, rc))) => match le.cmp(re) {
                    Ordering::Less => {
                        let c = (*lc).clone();
                        match interval_sign(&c) {
                            Some(Ordering::Equal) => {
                                lhs_iter.next();
                            }
                            other => return other,
                        }
                    }
                    Ordering::Greater => {
                        return Some(if rc.is_positive() {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        });
                    }
                    Ordering::Equal => {
                        let diff = lc.sub(&RatInterval::point((*rc).clone()));
                        match interval_sign(&diff) {
                            Some(Ordering::Equal) => {
                                lhs_iter.next();
                                rhs_iter.next();
                            }
                            other => return other,
                        }
                    }
                },
            }
        }
    }

    /// Enclosure of `x^e` for a certainly positive enclosed scalar.
    pub fn pow(&self, e: &Rat, tol: &Rat) -> Option<Self> {
        if self.is_zero() {
            return if e.is_positive() { Some(Self::zero()) } else { None };
        }
        if let Some(exact) = self.as_exact() {
            if let Some((me, mc)) = exact.as_monomial() {
                if mc.is_positive() {
                    let (lo, hi) = rat::pow_enclose(mc, e, tol);
                    return Some(Self::monomial(RatInterval::new(lo, hi), me * e));
                }
            }
            if !exact.is_positive() {
                return None;
            }
            let (lo, hi, v) = exact.monomial_bracket(&bracket_slack(&exact, tol));
            if !lo.is_positive() {
                return None;
            }
            let b = RatInterval::new(lo, hi).pow(e, tol);
            return Some(Self::monomial(b, &v * e));
        }
        // Interval-coefficient case: bracket by leading-term monomials.
        // Tail terms sit at strictly deeper exponents, so they move the
        // value by less than s * t^v for every rational s > 0; padding
        // the affected side by any positive slack is sound.
        let (v, c) = self.terms.first().cloned()?;
        if !c.lo().is_positive() {
            return None;
        }
        let tail_may_be_negative = self.terms.iter().skip(1).any(|(_, tc)| tc.lo().is_negative());
        let tail_may_be_positive = self.terms.iter().skip(1).any(|(_, tc)| tc.hi().is_positive());
        let slack = (c.lo() * tol).min(c.lo() / crate::rat::rint(2));
        let lo = if tail_may_be_negative { c.lo() - &slack } else { c.lo().clone() };
        let hi = if tail_may_be_positive { c.hi() + &slack } else { c.hi().clone() };
        let b = RatInterval::new(lo, hi).pow(e, tol);
        Some(Self::monomial(b, &v * e))
    }
}

fn bracket_slack(s: &PuiseuxScalar, tol: &Rat) -> Rat {
    let (_, c) = s.leading().expect("slack of zero");
    (c.abs() * tol).min(tol.clone())
}

fn interval_sign(c: &RatInterval) -> Option<Ordering> {
    if c.lo().is_positive() {
        Some(Ordering::Greater)
    } else if c.hi().is_negative() {
        Some(Ordering::Less)
    } else if c.is_point() && c.lo().is_zero() {
        Some(Ordering::Equal)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn t() -> PuiseuxScalar {
        PuiseuxScalar::t()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&t() + &-&t()).is_zero());
    }

    #[test]
    fn like_terms_collect() {
        // (2 + t^(1/2)) + t^(1/2) = 2 + 2 t^(1/2)
        let half = rat(1, 2);
        let a = PuiseuxScalar::from_terms(vec![(rint(0), rint(2)), (half.clone(), rint(1))]);
        let b = PuiseuxScalar::monomial(rint(1), half.clone());
        let sum = &a + &b;
        assert_eq!(
            sum,
            PuiseuxScalar::from_terms(vec![(rint(0), rint(2)), (half, rint(2))])
        );
    }

    #[test]
    fn disjoint_supports_stack() {
        let sum = &t() + &PuiseuxScalar::monomial(rint(1), rint(2));
        assert_eq!(sum.terms().len(), 2);
    }

    #[test]
    fn exponents_add_under_mul() {
        let r = PuiseuxScalar::monomial(rint(1), rat(1, 2));
        assert_eq!(&r * &r, t());
    }

    #[test]
    fn difference_of_squares() {
        let one = PuiseuxScalar::one();
        let a = &one + &t();
        let b = &one - &t();
        let expect = &one - &PuiseuxScalar::monomial(rint(1), rint(2));
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn zero_annihilates() {
        let x = &PuiseuxScalar::constant(rat(3, 2)) + &t();
        assert!((&PuiseuxScalar::zero() * &x).is_zero());
    }

    #[test]
    fn order_makes_t_infinitesimal() {
        assert!(t() < PuiseuxScalar::constant(rat(1, 2)));
        let t2 = PuiseuxScalar::monomial(rint(1), rint(2));
        assert!(t2 < t());
        let two_plus_t = &PuiseuxScalar::constant(rint(2)) + &t();
        assert!(two_plus_t > PuiseuxScalar::constant(rint(2)));
    }

    #[test]
    fn valuation_reads_least_exponent() {
        let x = PuiseuxScalar::from_terms(vec![(rat(1, 2), rint(3)), (rint(1), rint(1))]);
        assert_eq!(x.valuation(), Valuation::Finite(rat(1, 2)));
        assert_eq!(PuiseuxScalar::zero().valuation(), Valuation::Infinite);
        assert_eq!(
            PuiseuxScalar::constant(rint(5)).valuation(),
            Valuation::Finite(rint(0))
        );
    }

    #[test]
    fn standard_part_cases() {
        let x = &PuiseuxScalar::constant(rint(2)) + &t();
        assert_eq!(x.standard_part(), Ok(rint(2)));
        let y = PuiseuxScalar::monomial(rint(1), rat(1, 3));
        assert_eq!(y.standard_part(), Ok(rint(0)));
        let z = PuiseuxScalar::monomial(rint(1), rint(-1));
        assert_eq!(z.standard_part(), Err(ScalarError::NotFinite));
    }

    #[test]
    fn monomial_powers() {
        let tol = rat(1, 1_000_000);
        // (4 t^2)^(1/2) = 2 t
        let x = PuiseuxScalar::monomial(rint(4), rint(2));
        assert_eq!(
            x.monomial_power(&rat(1, 2), &tol).unwrap(),
            MonomialPower::Exact(PuiseuxScalar::monomial(rint(2), rint(1)))
        );
        // t^(3/2)
        assert_eq!(
            t().monomial_power(&rat(3, 2), &tol).unwrap(),
            MonomialPower::Exact(PuiseuxScalar::monomial(rint(1), rat(3, 2)))
        );
        // (2t)^(1/2): certified enclosure of sqrt(2), width <= tol
        let y = PuiseuxScalar::monomial(rint(2), rint(1));
        match y.monomial_power(&rat(1, 2), &tol).unwrap() {
            MonomialPower::Enclosure { coeff, exponent } => {
                assert_eq!(exponent, rat(1, 2));
                assert!(coeff.width() <= tol);
                assert!(coeff.lo() * coeff.lo() <= rint(2));
                assert!(coeff.hi() * coeff.hi() >= rint(2));
            }
            other => panic!("expected enclosure, got {other:?}"),
        }
        // multi-term and nonpositive inputs are rejected
        let m = &t() + &PuiseuxScalar::one();
        assert_eq!(
            m.monomial_power(&rat(1, 2), &tol),
            Err(ScalarError::NotMonomial)
        );
        let neg = PuiseuxScalar::constant(rint(-1));
        assert_eq!(
            neg.monomial_power(&rat(1, 2), &tol),
            Err(ScalarError::NotMonomial)
        );
    }

    #[test]
    fn division_by_monomial() {
        let x = PuiseuxScalar::from_terms(vec![(rint(2), rint(3)), (rint(3), rint(1))]);
        let d = PuiseuxScalar::monomial(rint(3), rint(2));
        let q = x.div_monomial(&d).unwrap();
        assert_eq!(&q * &d, x);
        let m = &t() + &PuiseuxScalar::one();
        assert!(x.div_monomial(&m).is_err());
    }

    #[test]
    fn display_round_trip_shapes() {
        let x = PuiseuxScalar::from_terms(vec![(rat(1, 2), rat(3, 2)), (rint(2), rint(1))]);
        assert_eq!(x.to_string(), "3/2*t^(1/2) + t^2");
        assert_eq!(PuiseuxScalar::zero().to_string(), "0");
        let y = &PuiseuxScalar::constant(rint(2)) - &t();
        assert_eq!(y.to_string(), "2 - t");
    }

    #[test]
    fn enclosure_comparisons() {
        let e = ScalarEnclosure::exact(&(&PuiseuxScalar::constant(rint(2)) + &t()));
        assert_eq!(
            e.cmp_scalar(&PuiseuxScalar::constant(rint(2))),
            Some(Ordering::Greater)
        );
        assert_eq!(
            e.cmp_scalar(&PuiseuxScalar::constant(rint(3))),
            Some(Ordering::Less)
        );
        let wide = ScalarEnclosure::monomial(RatInterval::new(rint(1), rint(3)), rint(0));
        assert_eq!(wide.cmp_scalar(&PuiseuxScalar::constant(rint(2))), None);
    }
}
