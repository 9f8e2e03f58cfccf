//! Exact rationals.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Parsing accepts `p` or `p/q` only; decimal literals
//! are rejected so that every structure constant is entered exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::HccError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `(-1)^k`.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, HccError> {
    let t = s.trim();
    let bad = || HccError::Parse(format!("not an exact rational literal: {s:?}"));
    if t.is_empty() || t.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let is_int = |x: &str| {
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(HccError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical `p` / `p/q` rendering used in reports.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
