//! Arbitrary-precision rational scalars and their text representations.
//!
//! `Rational` is the base scalar of the whole crate: every node, weight and
//! kernel coefficient ultimately reduces to rationals. `num_rational::BigRational`
//! already maintains the canonical form we rely on (positive denominator,
//! gcd(|num|, den) = 1, reduction after every operation), so it is used directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` with machine-integer inputs.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// 10^k as a rational.
pub fn pow10(k: u32) -> Rational {
    Rational::from_integer(BigInt::from(10u32).pow(k))
}

/// n! as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p/q`, an integer, or a finite decimal expansion such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part == "-" || int_part.is_empty() {
            "0"
        } else {
            int_part
        };
        let i: BigInt = int_part
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Invalid(s.to_string()));
        }
        let f: BigInt = frac_part
            .parse()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rational::new(f, scale);
        let int = Rational::from_integer(i);
        return Ok(if negative { int - frac } else { int + frac });
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| ParseRationalError::Invalid(s.to_string()))?;
    Ok(Rational::from_integer(n))
}

/// Rounding direction for decimal rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundDir {
    Down,
    Up,
    Nearest,
}

/// Renders `r` with `places` digits after the decimal point, rounded in the
/// requested direction (`Down` = toward −∞, `Up` = toward +∞), so that a
/// printed interval still encloses the exact value.
pub fn decimal_string(r: &Rational, places: u32, dir: RoundDir) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let n = match dir {
        RoundDir::Down => scaled.floor().to_integer(),
        RoundDir::Up => scaled.ceil().to_integer(),
        RoundDir::Nearest => (scaled + rat(1, 2)).floor().to_integer(),
    };
    let negative = n.is_negative();
    let abs = n.abs();
    let (int_part, frac_part) = (abs.clone() / &scale, abs % &scale);
    let mut frac_str = frac_part.to_string();
    while (frac_str.len() as u32) < places {
        frac_str.insert(0, '0');
    }
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_str}")
    }
}

/// Floor of log2(|r|) is not needed; this is the simpler predicate `|r| <= 10^-k`.
pub fn abs_le_pow10(r: &Rational, k: u32) -> bool {
    r.abs() * pow10(k) <= Rational::one()
}

/// Best-effort float for display and for callers that want approximate values.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("17").unwrap(), rat_int(17));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1.375").unwrap(), rat(11, 8));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2e3").is_err());
    }

    #[test]
    fn directed_decimal_rendering_brackets_the_value() {
        let third = rat(1, 3);
        assert_eq!(decimal_string(&third, 4, RoundDir::Down), "0.3333");
        assert_eq!(decimal_string(&third, 4, RoundDir::Up), "0.3334");
        let neg = rat(-1, 3);
        assert_eq!(decimal_string(&neg, 4, RoundDir::Down), "-0.3334");
        assert_eq!(decimal_string(&neg, 4, RoundDir::Up), "-0.3333");
        assert_eq!(decimal_string(&rat(1, 2), 2, RoundDir::Nearest), "0.50");
    }
}
