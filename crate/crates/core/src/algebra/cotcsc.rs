//! The differential ring `Q[c, t] / (t^2 = c - 1)` with `c = csc^2(theta)`,
//! `t = cot(theta)` and derivation `D(c) = -2ct`, `D(t) = -c`.

use std::fmt;

use super::{Polynomial, Rational};
use num_traits::One;

/// `even(c) + t * odd(c)`, always reduced to `t`-degree at most one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CotCscExpression {
    even: Polynomial,
    odd: Polynomial,
}

impl CotCscExpression {
    pub fn new(even: Polynomial, odd: Polynomial) -> Self {
        Self { even, odd }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(v: Rational) -> Self {
        Self::new(Polynomial::constant(v), Polynomial::zero())
    }

    /// `csc^2(theta)`.
    pub fn csc2() -> Self {
        Self::new(Polynomial::x(), Polynomial::zero())
    }

    /// `cot(theta)`.
    pub fn cot() -> Self {
        Self::new(Polynomial::zero(), Polynomial::one())
    }

    pub fn even(&self) -> &Polynomial {
        &self.even
    }

    pub fn odd(&self) -> &Polynomial {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.even + &other.even, &self.odd + &other.odd)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.even.scale(k), self.odd.scale(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c_minus_one = Polynomial::linear(Rational::one(), -Rational::one());
        let even = &self.even * &other.even + &c_minus_one * &(&self.odd * &other.odd);
        let odd = &self.even * &other.odd + &self.odd * &other.even;
        Self::new(even, odd)
    }

    /// d/dtheta, by Leibniz with the reduction `t^2 -> c - 1` applied.
    pub fn derive(&self) -> Self {
        let c = Polynomial::x();
        let minus_two = Rational::from_integer((-2).into());
        // D f(c) = -2 c f'(c) t
        let odd = (&c * &self.even.derivative()).scale(&minus_two);
        // D (t g(c)) = -c g(c) - 2 c (c - 1) g'(c)
        let c2_minus_c = Polynomial::from_ints(&[0, -1, 1]);
        let even = -(&c * &self.odd) + (&c2_minus_c * &self.odd.derivative()).scale(&minus_two);
        Self::new(even, odd)
    }

    pub fn derive_n(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |e, _| e.derive())
    }
}

impl fmt::Display for CotCscExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even = self.even.to_string().replace('x', "c");
        let odd = self.odd.to_string().replace('x', "c");
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{even}"),
            (true, false) => write!(f, "t*({odd})"),
            (false, false) => write!(f, "{even} + t*({odd})"),
        }
    }
}
