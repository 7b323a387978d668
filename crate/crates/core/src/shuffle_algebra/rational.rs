//! Exact rational coefficients.
//!
//! Backed by `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Renders `p/q`, always with an explicit denominator (`1/1`, `0/1`).
pub fn to_ratio_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Renders the shortest form: `p` for integers, `p/q` otherwise.
pub fn to_display_string(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        to_ratio_string(value)
    }
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow::pow(base.clone(), exp as usize)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_strings() {
        assert_eq!(to_ratio_string(&rational(2, 8)), "1/4");
        assert_eq!(to_ratio_string(&integer(3)), "3/1");
        assert_eq!(to_ratio_string(&rational(0, 5)), "0/1");
        assert_eq!(to_ratio_string(&rational(3, -6)), "-1/2");
        assert_eq!(to_display_string(&integer(-7)), "-7");
        assert_eq!(to_display_string(&rational(61, 64)), "61/64");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rational("5/16").unwrap(), rational(5, 16));
        assert_eq!(parse_rational("-4").unwrap(), integer(-4));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rational(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(16, 8), BigInt::from(12870));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
