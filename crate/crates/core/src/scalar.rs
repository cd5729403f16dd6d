//! Scalar abstractions shared by the exact and floating engines.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

/// An ordered field the elimination engines can run over.
///
/// Exact results (zero pivots detected without tolerance) require an exact
/// field such as [`Rational`]; floating types satisfy the bound but their zero
/// tests are only as good as the rounding allows.
pub trait Field: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every field embeds the integers")
    }
}

impl<T> Field for T where T: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"1"`, `"-3/2"` or `"0.25"` into an exact rational.
///
/// Decimal strings are read as exact decimal fractions, so `"0.1"` is `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let invalid = || ParseRationalError::Invalid(s.to_string());

    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = parse_int(num.trim()).ok_or_else(invalid)?;
        let den: BigInt = parse_int(den.trim()).ok_or_else(invalid)?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(num, den));
    }

    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(invalid());
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa = BigInt::from_str_radix(&digits, 10).map_err(|_| invalid())?;
    let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Rational::new(mantissa, scale);
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix('+').unwrap_or(s);
    let digits = body.strip_prefix('-').unwrap_or(body);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str_radix(body, 10).ok()
}

/// Smallest integer `>= num / den` for positive `den`.
pub fn ceil_div(num: usize, den: usize) -> usize {
    num.div_ceil(den)
}

pub(crate) fn rational_from_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub(crate) fn rational_one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rational("1").unwrap(), r(1, 1));
        assert_eq!(parse_rational("3/2").unwrap(), r(3, 2));
        assert_eq!(parse_rational("0.5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), r(-5, 4));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), r(3, 2));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("-2/-4").unwrap(), r(1, 2));
    }

    #[test]
    fn decimal_is_exact() {
        assert_eq!(parse_rational("0.1").unwrap(), r(1, 10));
        assert_ne!(parse_rational("0.3333333333").unwrap(), r(1, 3));
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(parse_rational("abc"), Err(ParseRationalError::Invalid(_))));
        assert!(matches!(parse_rational("1.2.3"), Err(ParseRationalError::Invalid(_))));
        assert!(matches!(parse_rational("."), Err(ParseRationalError::Invalid(_))));
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(matches!(parse_rational("1e3"), Err(ParseRationalError::Invalid(_))));
    }

    #[test]
    fn ceil_div_rounds_up() {
        assert_eq!(ceil_div(9, 3), 3);
        assert_eq!(ceil_div(10, 3), 4);
        assert_eq!(ceil_div(0, 3), 0);
    }
}
