//! Exact arithmetic: arbitrary-precision integers and rationals, dense
//! polynomials over Q, truncated power series with polynomial coefficients,
//! and the cot/csc differential ring.

mod cotcsc;
mod poly;
mod series;

pub use cotcsc::CotCscExpression;
pub use poly::Polynomial;
pub use series::{TruncatedSeries, DEFAULT_ORDER};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type Integer = BigInt;

/// Rational in lowest terms with a strictly positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `2^e` for any signed exponent, as an exact rational.
pub fn pow2(e: i64) -> Rational {
    let p = Integer::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}

/// `(-1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Converts a rational to an integer, failing loudly when it is not one.
pub fn expect_integer(value: &Rational, context: &str) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::IntegralityViolation {
            context: context.to_string(),
            value: value.to_string(),
        })
    }
}

/// `base^exp` for a nonnegative exponent, with `0^0 = 1`.
pub fn ipow(base: &Integer, exp: u32) -> Integer {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_both_signs() {
        assert_eq!(pow2(3), rat(8));
        assert_eq!(pow2(-2), ratio(1, 4));
        assert_eq!(pow2(0), rat(1));
    }

    #[test]
    fn integrality_is_asserted() {
        assert_eq!(expect_integer(&ratio(12, 4), "t").unwrap(), int(3));
        assert!(matches!(
            expect_integer(&ratio(1, 2), "t"),
            Err(Error::IntegralityViolation { .. })
        ));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }
}
