//! Dense univariate polynomials over Q.
//!
//! Coefficients are stored in ascending degree order. The vector is empty
//! for the zero polynomial and its last entry is nonzero otherwise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = Integer>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_integers(coeffs.iter().map(|&c| Integer::from(c)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` is the zero polynomial's degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(Integer::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * b;
            }
            quot[k] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Returns `q` with `self = divisor * q`, or `NonExactDivision`.
    pub fn divexact(&self, divisor: &Polynomial) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision {
                remainder: r.to_string(),
            })
        }
    }

    /// Homogenized substitution `sum_k p_k (a x + b)^k (c x + d)^(m - k)`,
    /// i.e. `(c x + d)^m p((a x + b)/(c x + d))` with denominators cleared.
    pub fn substitute_linear_fraction(
        &self,
        a: &Integer,
        b: &Integer,
        c: &Integer,
        d: &Integer,
        m: usize,
    ) -> Result<Self> {
        let degree = self.degree().unwrap_or(0);
        if self.degree().is_some_and(|deg| deg > m) {
            return Err(Error::DegreeExceedsHomogenization { degree, m });
        }
        let num = Self::linear(
            Rational::from_integer(a.clone()),
            Rational::from_integer(b.clone()),
        );
        let den = Self::linear(
            Rational::from_integer(c.clone()),
            Rational::from_integer(d.clone()),
        );
        let mut num_pows = Vec::with_capacity(self.coeffs.len());
        let mut p = Self::one();
        for _ in 0..self.coeffs.len() {
            num_pows.push(p.clone());
            p = &p * &num;
        }
        let mut den_pows = Vec::with_capacity(m + 1);
        let mut p = Self::one();
        for _ in 0..=m {
            den_pows.push(p.clone());
            p = &p * &den;
        }
        let mut out = Self::zero();
        for (k, pk) in self.coeffs.iter().enumerate() {
            if pk.is_zero() {
                continue;
            }
            out += &(&num_pows[k] * &den_pows[m - k]).scale(pk);
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, asserting integrality.
    pub fn to_integers(&self, context: &str) -> Result<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| super::expect_integer(c, context))
            .collect()
    }

    /// True when only powers `x^i` with `i % 2 == parity` occur.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % 2 == parity % 2)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert!((p(&[3, 4, 5]) * Polynomial::zero()).is_zero());
        assert_eq!(p(&[1, 1]) * p(&[0, 2, 10]), p(&[0, 2, 12, 10]));
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!((p(&[1, 1]) - p(&[0, 1])).degree(), Some(0));
    }

    #[test]
    fn divexact_examples() {
        assert_eq!(p(&[1, 0, -1]).divexact(&p(&[1, 1])).unwrap(), p(&[1, -1]));
        let q = p(&[0, 2, 12, 10]).divexact(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[0, 2, 10]));
        assert_eq!(&q * &p(&[1, 1]), p(&[0, 2, 12, 10]));
        assert!(matches!(
            p(&[1, 0, 1]).divexact(&p(&[1, 1])),
            Err(Error::NonExactDivision { .. })
        ));
        assert!(matches!(
            p(&[1]).divexact(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn substitution_examples() {
        let (two, zero, one) = (int(2), int(0), int(1));
        let s = p(&[1, 1])
            .substitute_linear_fraction(&two, &zero, &one, &one, 1)
            .unwrap();
        assert_eq!(s, p(&[1, 3]));
        let s = p(&[1])
            .substitute_linear_fraction(&two, &zero, &one, &one, 0)
            .unwrap();
        assert_eq!(s, p(&[1]));
        let s = p(&[8, 16])
            .substitute_linear_fraction(&two, &zero, &one, &one, 2)
            .unwrap();
        assert_eq!(s, p(&[8, 48, 40]));
        let r4 = s.shift(1).scale(&crate::algebra::ratio(1, 4));
        assert_eq!(r4, p(&[0, 2, 12, 10]));
        assert!(matches!(
            p(&[1, 1, 1]).substitute_linear_fraction(&two, &zero, &one, &one, 1),
            Err(Error::DegreeExceedsHomogenization { degree: 2, m: 1 })
        ));
    }

    #[test]
    fn calculus_and_eval() {
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
        assert_eq!(p(&[1, 2, 3]).eval(&rat(2)), rat(17));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 2, -28, 1]).to_string(), "2x - 28x^2 + x^3");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| Polynomial::from_ints(&c))
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        }

        #[test]
        fn divexact_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).divexact(&b).unwrap(), a);
        }

        #[test]
        fn homogenization_step(p in small_poly(), a in -3i64..4, b in -3i64..4,
                               c in -3i64..4, d in -3i64..4, extra in 0usize..3) {
            let m = p.degree().unwrap_or(0) + extra;
            let (a, b, c, d) = (int(a), int(b), int(c), int(d));
            let lo = p.substitute_linear_fraction(&a, &b, &c, &d, m).unwrap();
            let hi = p.substitute_linear_fraction(&a, &b, &c, &d, m + 1).unwrap();
            let den = Polynomial::linear(Rational::from_integer(c), Rational::from_integer(d));
            prop_assert_eq!(hi, den * lo);
        }
    }
}
