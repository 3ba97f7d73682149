//! The value semirings of the measure.
//!
//! Measures take values in the ordered semiring of cuts over the
//! nonnegative finite scalars. Over the Puiseux field every such cut has
//! one of three closed forms, which is what [`MeasureValue`] stores:
//!
//! * `Zero` (also standing in for the would-be "infinitely deep" cut),
//! * `Inf(level)`: the class of positive infinitesimals of valuation
//!   `level` (larger level means deeper, hence smaller),
//! * `Std(size)`: the class of finite non-infinitesimals with the given
//!   standard part, carried as a certified interval (degenerate when
//!   exact).
//!
//! Addition keeps the dominant summand: two infinitesimal classes add to
//! the shallower one, and any standard size absorbs every infinitesimal.
//! Multiplication adds levels and multiplies sizes.
//!
//! ```
//! use puiseux_measure::semiring::MeasureValue;
//! use puiseux_measure::rat::{rat, rint};
//!
//! let a = MeasureValue::inf(rint(1));
//! let b = MeasureValue::inf(rint(2));
//! assert_eq!(a.clone() + b, MeasureValue::inf(rint(1)));
//! let s = MeasureValue::std_exact(rat(1, 2));
//! assert_eq!(s.clone() + a.clone(), s.clone());
//! assert_eq!(s * a, MeasureValue::inf(rint(1)));
//! ```
//!
//! [`TropicalValue`] is the coarser semiring used by the second measure:
//! levels under (min, +), with `+infinity` as zero and `0` as unit. The
//! homomorphism [`to_tropical`] collapses every standard size to level 0.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{Signed, Zero as NumZero};
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::interval::RatInterval;
use crate::puiseux::{PuiseuxScalar, Valuation};
use crate::rat::{self, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemiringError {
    /// The class map is defined on nonnegative scalars of nonnegative
    /// valuation only.
    #[error("scalar outside the domain of the class map (negative or infinite)")]
    OutOfDomain,
}

/// Outcome of a comparison that may be blocked by overlapping enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp3 {
    True,
    False,
    /// Both sides are non-degenerate overlapping intervals; refine and retry.
    Indistinguishable,
}

/// An element of the value semiring in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureValue {
    Zero,
    /// Positive infinitesimal class at the given level (a nonnegative
    /// rational). There is no value `Inf(+infinity)`; that cut is `Zero`.
    Inf(Rat),
    /// Standard-size class; the interval is positive, degenerate when exact.
    Std(RatInterval),
}

impl MeasureValue {
    pub fn inf(level: Rat) -> Self {
        assert!(
            !level.is_negative(),
            "infinitesimal levels are nonnegative in the unit-cube semiring"
        );
        MeasureValue::Inf(level)
    }

    pub fn std(size: RatInterval) -> Self {
        assert!(size.lo().is_positive(), "standard sizes are positive");
        MeasureValue::Std(size)
    }

    pub fn std_exact(size: Rat) -> Self {
        Self::std(RatInterval::point(size))
    }

    pub fn one() -> Self {
        Self::std_exact(Rat::from_integer(1.into()))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MeasureValue::Zero)
    }

    /// `<=` on the semiring order. `Indistinguishable` occurs only for
    /// overlapping non-degenerate standard sizes.
    pub fn leq(&self, other: &Self) -> Cmp3 {
        use MeasureValue::*;
        match (self, other) {
            (Zero, _) => Cmp3::True,
            (_, Zero) => Cmp3::False,
            (Inf(_), Std(_)) => Cmp3::True,
            (Std(_), Inf(_)) => Cmp3::False,
            // Deeper level = smaller value.
            (Inf(a), Inf(b)) => {
                if a >= b {
                    Cmp3::True
                } else {
                    Cmp3::False
                }
            }
            (Std(a), Std(b)) => match a.try_cmp(b) {
                Some(Ordering::Less) | Some(Ordering::Equal) => Cmp3::True,
                Some(Ordering::Greater) => Cmp3::False,
                None if a.certainly_le(b) => Cmp3::True,
                None => Cmp3::Indistinguishable,
            },
        }
    }

    /// JSON rendering with exact rational strings.
    pub fn to_json(&self) -> Json {
        match self {
            MeasureValue::Zero => json!({"kind": "zero"}),
            MeasureValue::Inf(level) => json!({"kind": "inf", "level": rat::render(level)}),
            MeasureValue::Std(size) => json!({
                "kind": "std",
                "lo": rat::render(size.lo()),
                "hi": rat::render(size.hi()),
            }),
        }
    }
}

impl Add for MeasureValue {
    type Output = MeasureValue;
    fn add(self, rhs: MeasureValue) -> MeasureValue {
        use MeasureValue::*;
        match (self, rhs) {
            (Zero, x) | (x, Zero) => x,
            // A standard size absorbs every infinitesimal.
            (Std(r), Inf(_)) | (Inf(_), Std(r)) => Std(r),
            (Std(r), Std(s)) => Std(r.add(&s)),
            // Sum of two infinitesimal classes is the shallower one.
            (Inf(a), Inf(b)) => Inf(a.min(b)),
        }
    }
}

impl Mul for MeasureValue {
    type Output = MeasureValue;
    fn mul(self, rhs: MeasureValue) -> MeasureValue {
        use MeasureValue::*;
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (Std(r), Inf(g)) | (Inf(g), Std(r)) => {
                let _ = r; // standard factors do not move the level
                Inf(g)
            }
            (Std(r), Std(s)) => Std(r.mul(&s)),
            (Inf(a), Inf(b)) => Inf(a + b),
        }
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureValue::Zero => write!(f, "0"),
            MeasureValue::Inf(level) => write!(f, "inf(level {})", rat::render(level)),
            MeasureValue::Std(size) => write!(f, "std({size})"),
        }
    }
}

/// The class map: sends a nonnegative finite scalar to its cut.
pub fn cls(x: &PuiseuxScalar) -> Result<MeasureValue, SemiringError> {
    if x.is_negative() {
        return Err(SemiringError::OutOfDomain);
    }
    match x.valuation() {
        Valuation::Infinite => Ok(MeasureValue::Zero),
        Valuation::Finite(v) => {
            if v.is_negative() {
                Err(SemiringError::OutOfDomain)
            } else if v.is_zero() {
                let pi = x.standard_part().expect("valuation is zero");
                Ok(MeasureValue::std_exact(pi))
            } else {
                Ok(MeasureValue::inf(v))
            }
        }
    }
}

/// An element of the tropical semiring: a rational level or `+infinity`.
/// Addition is `min`, multiplication is `+`, and the induced order of
/// values is the reverse of the order of levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TropicalValue {
    Level(Rat),
    Infinity,
}

impl TropicalValue {
    pub fn level(r: Rat) -> Self {
        TropicalValue::Level(r)
    }

    /// The zero of the semiring.
    pub fn zero() -> Self {
        TropicalValue::Infinity
    }

    /// The unit of the semiring: level 0.
    pub fn one() -> Self {
        TropicalValue::Level(Rat::zero())
    }

    pub fn finite_level(&self) -> Option<&Rat> {
        match self {
            TropicalValue::Level(r) => Some(r),
            TropicalValue::Infinity => None,
        }
    }

    /// `<=` on tropical values: reverse order of levels, with the zero
    /// element (`+infinity`) below everything.
    pub fn leq(&self, other: &Self) -> bool {
        use TropicalValue::*;
        match (self, other) {
            (Infinity, _) => true,
            (_, Infinity) => false,
            (Level(a), Level(b)) => a >= b,
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            TropicalValue::Level(r) => json!({"level": rat::render(r)}),
            TropicalValue::Infinity => json!({"level": "inf"}),
        }
    }
}

/// Tropical addition: the minimum level.
pub fn t_add(a: TropicalValue, b: TropicalValue) -> TropicalValue {
    use TropicalValue::*;
    match (a, b) {
        (Infinity, x) | (x, Infinity) => x,
        (Level(a), Level(b)) => Level(a.min(b)),
    }
}

/// Tropical multiplication: the sum of levels, absorbing at infinity.
pub fn t_mul(a: TropicalValue, b: TropicalValue) -> TropicalValue {
    use TropicalValue::*;
    match (a, b) {
        (Infinity, _) | (_, Infinity) => Infinity,
        (Level(a), Level(b)) => Level(a + b),
    }
}

impl Add for TropicalValue {
    type Output = TropicalValue;
    fn add(self, rhs: TropicalValue) -> TropicalValue {
        t_add(self, rhs)
    }
}

impl Mul for TropicalValue {
    type Output = TropicalValue;
    fn mul(self, rhs: TropicalValue) -> TropicalValue {
        t_mul(self, rhs)
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Level(r) => write!(f, "level {}", rat::render(r)),
            TropicalValue::Infinity => write!(f, "level inf"),
        }
    }
}

/// The collapse onto the tropical semiring: levels survive, every
/// standard size maps to level 0, and zero maps to the tropical zero.
pub fn to_tropical(a: &MeasureValue) -> TropicalValue {
    match a {
        MeasureValue::Zero => TropicalValue::Infinity,
        MeasureValue::Inf(level) => TropicalValue::Level(level.clone()),
        MeasureValue::Std(_) => TropicalValue::Level(Rat::zero()),
    }
}

/// Tropical level of a value, treating standard sizes as level 0 and
/// zero as unreachable depth. Convenience for the bracket engine.
pub(crate) fn value_level(a: &MeasureValue) -> Option<Rat> {
    match to_tropical(a) {
        TropicalValue::Level(r) => Some(r),
        TropicalValue::Infinity => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn inf(n: i64, d: i64) -> MeasureValue {
        MeasureValue::inf(rat(n, d))
    }

    #[test]
    fn cls_examples() {
        assert_eq!(cls(&PuiseuxScalar::zero()), Ok(MeasureValue::Zero));
        let t32 = PuiseuxScalar::monomial(rint(1), rat(3, 2));
        assert_eq!(cls(&t32), Ok(inf(3, 2)));
        let x = PuiseuxScalar::from_terms(vec![(rint(0), rint(2)), (rint(1), rint(5))]);
        assert_eq!(cls(&x), Ok(MeasureValue::std_exact(rint(2))));
        // out of domain: negative, or infinite
        let neg = PuiseuxScalar::constant(rint(-1));
        assert_eq!(cls(&neg), Err(SemiringError::OutOfDomain));
        let big = PuiseuxScalar::monomial(rint(1), rint(-1));
        assert_eq!(cls(&big), Err(SemiringError::OutOfDomain));
    }

    #[test]
    fn addition_keeps_dominant_summand() {
        // A standard size absorbs infinitesimals.
        let s = MeasureValue::std_exact(rat(1, 2));
        assert_eq!(s.clone() + inf(5, 1), s.clone());
        // Two infinitesimal classes add to the shallower level.
        assert_eq!(inf(1, 1) + inf(2, 1), inf(1, 1));
        assert_eq!(MeasureValue::Zero + inf(3, 1), inf(3, 1));
    }

    #[test]
    fn multiplication_adds_levels() {
        assert_eq!(inf(1, 1) * inf(1, 2), inf(3, 2));
        assert_eq!(MeasureValue::std_exact(rint(3)) * inf(2, 1), inf(2, 1));
        assert_eq!(
            MeasureValue::std_exact(rint(2)) * MeasureValue::std_exact(rint(3)),
            MeasureValue::std_exact(rint(6))
        );
        assert_eq!(MeasureValue::Zero * inf(1, 1), MeasureValue::Zero);
    }

    #[test]
    fn order_examples() {
        assert_eq!(inf(2, 1).leq(&inf(1, 1)), Cmp3::True);
        // Every infinitesimal class is below every standard size.
        assert_eq!(
            inf(100, 1).leq(&MeasureValue::std_exact(rat(1, 1000))),
            Cmp3::True
        );
        assert_eq!(
            MeasureValue::std_exact(rint(1)).leq(&inf(0, 1)),
            Cmp3::False
        );
        // Overlapping non-degenerate sizes cannot be separated.
        let a = MeasureValue::std(RatInterval::new(rint(1), rint(3)));
        let b = MeasureValue::std(RatInterval::new(rint(2), rint(4)));
        assert_eq!(a.leq(&b), Cmp3::Indistinguishable);
    }

    #[test]
    fn tropical_operations() {
        use TropicalValue as T;
        assert_eq!(t_add(T::Level(rint(1)), T::Level(rint(2))), T::Level(rint(1)));
        // levels may be negative in the tropical semiring
        assert_eq!(
            t_mul(T::Level(rint(1)), T::Level(rint(-2))),
            T::Level(rint(-1))
        );
        assert_eq!(t_mul(T::Infinity, T::Level(rint(-5))), T::Infinity);
        assert!(T::Infinity.leq(&T::Level(rint(7))));
        assert!(T::Level(rint(2)).leq(&T::Level(rint(1))));
    }

    #[test]
    fn tropical_collapse() {
        assert_eq!(
            to_tropical(&inf(3, 2)),
            TropicalValue::Level(rat(3, 2))
        );
        // all standard sizes collapse to level 0
        assert_eq!(
            to_tropical(&MeasureValue::std_exact(rint(7))),
            TropicalValue::Level(rint(0))
        );
        assert_eq!(to_tropical(&MeasureValue::Zero), TropicalValue::Infinity);
    }

    #[test]
    fn json_shapes() {
        assert_eq!(MeasureValue::Zero.to_json().to_string(), r#"{"kind":"zero"}"#);
        assert_eq!(
            inf(3, 2).to_json().to_string(),
            r#"{"kind":"inf","level":"3/2"}"#
        );
        assert_eq!(
            MeasureValue::std_exact(rat(1, 3)).to_json().to_string(),
            r#"{"kind":"std","lo":"1/3","hi":"1/3"}"#
        );
        assert_eq!(
            TropicalValue::Level(rat(3, 2)).to_json().to_string(),
            r#"{"level":"3/2"}"#
        );
        assert_eq!(
            TropicalValue::Infinity.to_json().to_string(),
            r#"{"level":"inf"}"#
        );
    }
}
