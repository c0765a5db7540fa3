//! Exact rational scalars.
//!
//! All coefficients in the library are [`Rational`] values: arbitrary
//! precision, always in lowest terms with positive denominator. Cocycle
//! systems produce large intermediate coefficients under elimination, so
//! fixed-width arithmetic is never used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number: `BigRational` keeps itself reduced with a
/// positive denominator, which is exactly the invariant we need.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

/// Renders `r` as `"n"` or `"n/d"`.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses decimal-string numerator/denominator pairs (the JSON wire form
/// for integers of unbounded size).
pub fn from_decimal_strings(num: &str, den: &str) -> Option<Rational> {
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Splits a rational into decimal strings, denominator positive.
pub fn to_decimal_strings(r: &Rational) -> (String, String) {
    debug_assert!(r.denom().is_positive() || r.is_zero());
    (r.numer().to_string(), r.denom().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_invariant() {
        let r = ratio(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn decimal_string_round_trip() {
        let r = ratio(-22, 7);
        let (n, d) = to_decimal_strings(&r);
        assert_eq!(from_decimal_strings(&n, &d).unwrap(), r);
        assert!(from_decimal_strings("1", "0").is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(display(&rat(5)), "5");
        assert_eq!(display(&ratio(1, 2)), "1/2");
    }
}
