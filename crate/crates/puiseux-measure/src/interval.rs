//! Certified rational intervals.
//!
//! An interval `[lo, hi]` encloses one unknown real quantity. Arithmetic
//! keeps enclosures sound; comparisons are decided only when intervals
//! are disjoint (or both degenerate and equal).

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::rat::{self, Rat};

/// A closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        Self { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &Rat) -> bool {
        self.lo <= *r && *r <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c >= &Rat::zero() {
            Self::new(&self.lo * c, &self.hi * c)
        } else {
            Self::new(&self.hi * c, &self.lo * c)
        }
    }

    /// Enclosure of `x^e` for the enclosed `x > 0`. Requires `lo > 0`
    /// when `e` is not a nonnegative integer.
    pub fn pow(&self, e: &Rat, tol: &Rat) -> Self {
        let (a, b) = if e >= &Rat::zero() {
            (&self.lo, &self.hi)
        } else {
            (&self.hi, &self.lo)
        };
        let lo = if a.is_zero() {
            Rat::zero()
        } else {
            rat::pow_enclose(a, e, tol).0
        };
        let hi = rat::pow_enclose(b, e, tol).1;
        Self::new(lo, hi)
    }

    /// Three-way comparison of enclosed quantities, when certain.
    pub fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.is_point() && other.is_point() && self.lo == other.lo {
            return Some(Ordering::Equal);
        }
        if self.hi < other.lo {
            return Some(Ordering::Less);
        }
        if self.lo > other.hi {
            return Some(Ordering::Greater);
        }
        None
    }

    /// True when every enclosed value is `<=` every value of `other`.
    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(Self::new(lo, hi))
        } else {
            None
        }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", rat::render(&self.lo))
        } else {
            write!(f, "[{}, {}]", rat::render(&self.lo), rat::render(&self.hi))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn interval_arithmetic() {
        let a = RatInterval::new(rint(1), rint(2));
        let b = RatInterval::new(rat(1, 2), rint(1));
        assert_eq!(a.add(&b), RatInterval::new(rat(3, 2), rint(3)));
        assert_eq!(a.mul(&b), RatInterval::new(rat(1, 2), rint(2)));
    }

    #[test]
    fn comparisons_need_separation() {
        let a = RatInterval::new(rint(1), rint(2));
        let b = RatInterval::new(rint(3), rint(4));
        let c = RatInterval::new(rat(3, 2), rint(3));
        assert_eq!(a.try_cmp(&b), Some(Ordering::Less));
        assert_eq!(b.try_cmp(&a), Some(Ordering::Greater));
        assert_eq!(a.try_cmp(&c), None);
        assert_eq!(
            RatInterval::point(rint(1)).try_cmp(&RatInterval::point(rint(1))),
            Some(Ordering::Equal)
        );
    }

    #[test]
    fn pow_enclosure_is_sound() {
        let x = RatInterval::new(rint(2), rint(2));
        let p = x.pow(&rat(1, 2), &rat(1, 1_000_000));
        assert!(p.lo() * p.lo() <= rint(2));
        assert!(p.hi() * p.hi() >= rint(2));
    }
}
