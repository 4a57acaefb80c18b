//! Exact rational scalars and strict text parsing.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

/// Arbitrary-precision rational number. Values are always canonical:
/// reduced to lowest terms with a positive denominator, zero stored as 0/1.
/// Equality is therefore structural.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}: expected \"a\" or \"a/b\" with decimal integers")]
    Invalid(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics when d = 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(text.as_bytes(), 10)
}

/// Parses `"a"` or `"a/b"` where a and b are decimal integers of arbitrary
/// size (optionally negative). Anything else is rejected, in particular
/// floating-point literals such as `"0.5"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let invalid = || ParseRationalError::Invalid(text.to_string());
    match text.split_once('/') {
        None => {
            let n = parse_integer(text).ok_or_else(invalid)?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = parse_integer(num).ok_or_else(invalid)?;
            let d = parse_integer(den).ok_or_else(invalid)?;
            if d == BigInt::from(0) {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical rendering: `"a"` when the denominator is 1, otherwise `"a/b"`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
