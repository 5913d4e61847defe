//! Exact rationals.
//!
//! [`Rational`] is an arbitrary-precision fraction that is always kept in
//! lowest terms with a positive denominator, so structural equality is value
//! equality and zero is `0/1`.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds `num/den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// True if the value is stored as `p/q` with `q > 0` and `gcd(|p|, q) = 1`.
pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer;
    q.denom().is_positive() && q.numer().abs().gcd(q.denom()).is_one()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p/q"` or a bare integer `"p"`; the result is reduced.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(String::from(text));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders in canonical `"p/q"` form, or `"p"` when the denominator is one.
pub fn format(q: &Rational) -> String {
    use alloc::string::ToString;
    q.to_string()
}
