//! Scalars: arbitrary-precision rationals, always in lowest terms with a
//! positive denominator. Serialized as `"p/q"`, or `"p"` when `q = 1`.

use crate::error::{Error, Result};
use num::{BigInt, One, Signed, Zero};

pub use num::BigRational as Rational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on `d = 0`, like integer division.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rat(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Input(format!("bad rational {s:?}: {e}")))
}

/// `base^e` for integer `e`, with negative exponents allowed when `base != 0`.
pub fn rat_pow(base: &Rational, e: i64) -> Result<Rational> {
    if base.is_zero() && e < 0 {
        return Err(Error::ZeroParameter);
    }
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    if e < 0 {
        acc = acc.recip();
    }
    Ok(acc)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    let n = r.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    n.to_string().parse().ok()
}
