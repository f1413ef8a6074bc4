//! Truncated power series in `z` whose coefficients are polynomials in `x`.
//!
//! A series of order `N` denotes `sum_{n<=N} c_n(x) z^n + O(z^(N+1))`. Binary
//! operations require equal orders; callers re-truncate explicitly.

use num_traits::One;

use super::{factorial, Integer, Polynomial, Rational};
use crate::error::{Error, Result};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything beyond `order` is dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Polynomial>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        Self { order, coeffs }
    }

    /// Series with constant-in-`x` rational coefficients.
    pub fn from_rationals(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::from_coeffs(
            order,
            coeffs
                .into_iter()
                .take(order + 1)
                .map(Polynomial::constant)
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn constant(order: usize, c: Polynomial) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Polynomial::one())
    }

    /// The series variable `z`.
    pub fn z(order: usize) -> Self {
        Self::from_coeffs(order, vec![Polynomial::zero(), Polynomial::one()])
    }

    fn egf(order: usize, f: impl Fn(usize) -> i64) -> Self {
        Self::from_rationals(
            order,
            (0..=order).map(|n| Rational::new(Integer::from(f(n)), factorial(n as u64))),
        )
    }

    pub fn exp(order: usize) -> Self {
        Self::egf(order, |_| 1)
    }

    pub fn sin(order: usize) -> Self {
        Self::egf(order, |n| match n % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        })
    }

    pub fn cos(order: usize) -> Self {
        Self::egf(order, |n| match n % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        })
    }

    pub fn sinh(order: usize) -> Self {
        Self::egf(order, |n| (n % 2) as i64)
    }

    pub fn cosh(order: usize) -> Self {
        Self::egf(order, |n| 1 - (n % 2) as i64)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    /// `n!` times the coefficient of `z^n`.
    pub fn egf_coeff(&self, n: usize) -> Polynomial {
        self.coeffs[n].scale(&Rational::from_integer(factorial(n as u64)))
    }

    /// Drops terms above `order`; widening is refused.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: order,
            });
        }
        Ok(Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Multiplies every coefficient by a polynomial in `x`.
    pub fn scale(&self, p: &Polynomial) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    fn same_order(&self, other: &Self) -> Result<usize> {
        if self.order == other.order {
            Ok(self.order)
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        Ok(Self {
            order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        Ok(Self {
            order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        let mut coeffs = vec![Polynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(Self { order, coeffs })
    }

    /// Quotient by a series whose constant term is a nonzero rational.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        let head = &other.coeffs[0];
        if !head.is_constant() || head.is_zero() {
            return Err(Error::NonUnitDenominator);
        }
        let inv = Rational::one() / head.coeff(0);
        let mut quot: Vec<Polynomial> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &other.coeffs[k];
                if !b.is_zero() {
                    acc -= &(b * &quot[n - k]);
                }
            }
            quot.push(acc.scale(&inv));
        }
        Ok(Self {
            order,
            coeffs: quot,
        })
    }

    /// `outer(inner)` for an inner series with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let order = self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Polynomial};
    use proptest::prelude::*;

    #[test]
    fn secant_coefficient() {
        let sec = TruncatedSeries::one(6)
            .div(&TruncatedSeries::cos(6))
            .unwrap();
        assert_eq!(sec.coeff(4), &Polynomial::constant(ratio(5, 24)));
        assert_eq!(sec.egf_coeff(4), Polynomial::from_ints(&[5]));
    }

    #[test]
    fn identities_and_cancellation() {
        let order = 8;
        let x = Polynomial::x();
        let tan = TruncatedSeries::sin(order)
            .div(&TruncatedSeries::cos(order))
            .unwrap();
        let num = TruncatedSeries::constant(order, x.clone())
            .add(&tan)
            .unwrap();
        let den = TruncatedSeries::one(order).sub(&tan.scale(&x)).unwrap();
        let q = num.div(&den).unwrap();
        assert_eq!(q.mul(&TruncatedSeries::one(order)).unwrap(), q);
        assert_eq!(den.mul(&q).unwrap(), num);
    }

    #[test]
    fn composition() {
        let order = 7;
        let inner = TruncatedSeries::sinh(order).scale(&Polynomial::x());
        let s = TruncatedSeries::sinh(order).compose(&inner).unwrap();
        assert_eq!(s.egf_coeff(3), Polynomial::from_ints(&[0, 1, 0, 1]));
        assert_eq!(s.egf_coeff(5), Polynomial::from_ints(&[0, 1, 0, 10, 0, 1]));

        let e = TruncatedSeries::exp(5);
        let zero = TruncatedSeries::zero(5);
        assert_eq!(e.compose(&zero).unwrap(), TruncatedSeries::one(5));

        let e3 = TruncatedSeries::exp(3)
            .compose(&TruncatedSeries::z(3))
            .unwrap();
        assert_eq!(e3, TruncatedSeries::exp(3));
        assert_eq!(e3.coeff(3), &Polynomial::constant(ratio(1, 6)));
    }

    #[test]
    fn error_paths() {
        let a = TruncatedSeries::exp(4);
        assert!(matches!(
            a.div(&TruncatedSeries::sin(4)),
            Err(Error::NonUnitDenominator)
        ));
        let xc = TruncatedSeries::constant(4, Polynomial::x());
        assert!(matches!(a.div(&xc), Err(Error::NonUnitDenominator)));
        assert!(matches!(
            a.compose(&TruncatedSeries::cos(4)),
            Err(Error::NonzeroInnerConstant)
        ));
        assert!(matches!(
            a.mul(&TruncatedSeries::exp(5)),
            Err(Error::OrderMismatch { left: 4, right: 5 })
        ));
        assert!(a.truncate(6).is_err());
        assert_eq!(
            TruncatedSeries::exp(6)
                .truncate(4)
                .unwrap()
                .mul(&a)
                .unwrap()
                .coeff(2),
            &Polynomial::constant(ratio(2, 1))
        );
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(prop::collection::vec(-5i64..6, 0..3), order + 1).prop_map(
            move |cs| {
                let mut coeffs: Vec<Polynomial> =
                    cs.iter().map(|c| Polynomial::from_ints(c)).collect();
                if coeffs[0].is_zero() || !coeffs[0].is_constant() {
                    coeffs[0] = Polynomial::from_ints(&[3]);
                }
                TruncatedSeries::from_coeffs(order, coeffs)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn div_inverts_mul(a in unit_series(6), b in unit_series(6)) {
            prop_assert_eq!(a.mul(&b).unwrap().div(&b).unwrap(), a);
        }
    }
}
