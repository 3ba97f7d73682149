//! Exact rational arithmetic helpers shared across the crate.
//!
//! Everything here is a thin layer over `num-rational`; the only
//! nontrivial piece is the certified enclosure of `r^(n/d)` by bisection
//! when the root is not rational.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The scalar coefficient and exponent type: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Shorthand for small rational constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for small integer constants.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Least common multiple of the denominators of `items`.
pub fn lcm_denominators<'a, I: IntoIterator<Item = &'a Rat>>(items: I) -> BigInt {
    let mut acc = BigInt::one();
    for r in items {
        acc = acc.lcm(r.denom());
    }
    acc
}

/// Exact integer power, with negative exponents as reciprocals.
/// Panics on `0^k` with `k < 0`.
pub fn pow_i64(r: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let abs = i32::try_from(k.unsigned_abs()).expect("exponent out of range");
    let p = r.pow(abs);
    if k > 0 {
        p
    } else {
        assert!(!r.is_zero(), "zero to a negative power");
        p.recip()
    }
}

fn nth_root_exact_int(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.nth_root(k);
    if pow_big(&root, k) == *n {
        Some(root)
    } else {
        None
    }
}

fn pow_big(b: &BigInt, k: u32) -> BigInt {
    b.pow(k)
}

/// Exact `r^(1/k)` for nonnegative `r`, when the result is rational.
pub fn nth_root_exact(r: &Rat, k: u32) -> Option<Rat> {
    debug_assert!(k > 0);
    let num = nth_root_exact_int(r.numer(), k)?;
    let den = nth_root_exact_int(r.denom(), k)?;
    Some(Rat::new(num, den))
}

/// Exact `r^e` for `r > 0` (or `r = 0` with `e > 0`), when it is rational.
pub fn pow_exact(r: &Rat, e: &Rat) -> Option<Rat> {
    if r.is_zero() {
        return if e.is_positive() { Some(Rat::zero()) } else { None };
    }
    debug_assert!(r.is_positive(), "pow_exact needs a positive base");
    let d = e.denom().to_u32()?;
    let n = e.numer().to_i64()?;
    let root = nth_root_exact(r, d)?;
    Some(pow_i64(&root, n))
}

/// Certified enclosure of `r^e` for `r > 0`: an interval `[lo, hi]` of
/// rationals with `lo <= r^e <= hi` and `hi - lo <= tol`.
/// Exact powers come back as degenerate intervals.
pub fn pow_enclose(r: &Rat, e: &Rat, tol: &Rat) -> (Rat, Rat) {
    debug_assert!(r.is_positive());
    debug_assert!(tol.is_positive());
    if let Some(exact) = pow_exact(r, e) {
        return (exact.clone(), exact);
    }
    let d = e
        .denom()
        .to_i64()
        .expect("exponent denominator out of range");
    let n = e
        .numer()
        .to_i64()
        .expect("exponent numerator out of range");
    // Solve y^d = r^n for y > 0 by bisection; y -> y^d is monotone.
    let target = pow_i64(r, n);
    let one = Rat::one();
    let (mut lo, mut hi) = if target >= one {
        (one.clone(), target.clone())
    } else {
        (target.clone(), one.clone())
    };
    let two = rint(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if pow_i64(&mid, d) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Largest multiple of `step` that is `<=` `r`.
pub fn floor_to_step(r: &Rat, step: &Rat) -> Rat {
    debug_assert!(step.is_positive());
    (r / step).floor() * step
}

/// Smallest multiple of `step` that is `>=` `r`.
pub fn ceil_to_step(r: &Rat, step: &Rat) -> Rat {
    debug_assert!(step.is_positive());
    (r / step).ceil() * step
}

/// Approximate value for display purposes only.
pub fn to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Render a rational as the exact string `p/q` (or `p` for integers).
pub fn render(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `-p`, or `p/q` with exact integer parts.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Smallest integer `m >= r`, as a `Rat`.
pub fn ceil_int(r: &Rat) -> Rat {
    Rat::from_integer(r.ceil().to_integer())
}
