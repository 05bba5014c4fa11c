//! Rational scalars.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; zero is `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rat;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// `(-1)^e` as a rational.
pub fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Parses `a` or `a/b` with integer `a` and positive integer `b`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d_str = d.trim();
            if d_str.starts_with('-') || d_str.starts_with('+') {
                return None;
            }
            let d: BigInt = d_str.parse().ok()?;
            if !d.is_positive() {
                return None;
            }
            Some(Rat::new(n, d))
        }
    }
}

/// Formats `r` as `a` or `a/b`; the inverse of [`parse_rat`].
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
