//! Closed forms in terms of central factorial numbers. Each function builds
//! one side of an identity from the `U`/`V` triangles only; nothing here
//! touches the recurrence-built families.

use num_traits::Zero;

use crate::algebra::{expect_integer, factorial, pow2, rat, sign, Integer, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::triangles::{u_number, v_number, Method};

fn u(n: usize, j: usize) -> Result<Rational> {
    Ok(Rational::from_integer(u_number(n, j, Method::Recurrence)?))
}

fn v(n: usize, j: usize) -> Result<Rational> {
    Ok(Rational::from_integer(v_number(n, j, Method::Recurrence)?))
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn one_plus_x() -> Polynomial {
    Polynomial::from_ints(&[1, 1])
}

fn one_minus_x() -> Polynomial {
    Polynomial::from_ints(&[1, -1])
}

fn one_plus_x2() -> Polynomial {
    Polynomial::from_ints(&[1, 0, 1])
}

/// `sum_{j in js} weight(j) x^j (1-x)^(n-j)`.
fn bernstein_sum(
    n: usize,
    js: impl Iterator<Item = usize>,
    weight: impl Fn(usize) -> Result<Rational>,
) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for j in js {
        let term =
            (Polynomial::x().pow(j as u32) * one_minus_x().pow((n - j) as u32)).scale(&weight(j)?);
        acc += &term;
    }
    Ok(acc)
}

fn integral(p: Polynomial, context: &str) -> Result<Polynomial> {
    p.to_integers(context)?;
    Ok(p)
}

/// `(1+x)^(n-2) sum_j 2^(2-j) (2j-1)! U(n,j) x^j (1-x)^(n-j)`, the closed
/// form of `R_{2n-1}(x)`. Needs `n >= 2`.
pub fn runs_odd(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::unsupported(
            "odd-index run closed form requires n >= 2, got n",
            n,
        ));
    }
    let sum = bernstein_sum(n, 1..=n, |j| {
        Ok(pow2(2 - j as i64) * fact(2 * j - 1) * u(n, j)?)
    })?;
    integral(one_plus_x().pow(n as u32 - 2) * sum, "R_{2n-1} closed form")
}

/// `(1+x)^(n-1) sum_j 2^(1-j) (2j)! U(n,j) x^j (1-x)^(n-j)`, the closed form
/// of `R_{2n}(x)`.
pub fn runs_even(n: usize) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::unsupported(
            "even-index run closed form requires n >= 1, got n",
            n,
        ));
    }
    let sum = bernstein_sum(n, 1..=n, |j| {
        Ok(pow2(1 - j as i64) * fact(2 * j) * u(n, j)?)
    })?;
    integral(one_plus_x().pow(n as u32 - 1) * sum, "R_{2n} closed form")
}

/// `x P_k(x)` from `U`: with `m = ceil(k/2)`,
/// `sum_j 2^(2m-2j) f(j) U(m,j) x^j (1-x)^(m-j)` where `f(j) = (2j-1)!` for
/// odd `k` and `(2j)!` for even `k`.
pub fn x_times_peak(k: usize) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::unsupported(
            "peak closed form requires index >= 1, got",
            k,
        ));
    }
    let m = k.div_ceil(2);
    let odd = k % 2 == 1;
    let sum = bernstein_sum(m, 1..=m, |j| {
        let f = if odd { fact(2 * j - 1) } else { fact(2 * j) };
        Ok(pow2(2 * (m - j) as i64) * f * u(m, j)?)
    })?;
    integral(sum, "x P_k closed form")
}

/// `P̂_k(x)` from `V`: with `m = floor(k/2)`,
/// `sum_{j=0..m} (2j + k mod 2)! V(m,j) x^j (1-x)^(m-j)`.
pub fn left_peak(k: usize) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::unsupported(
            "left peak closed form requires index >= 1, got",
            k,
        ));
    }
    let m = k / 2;
    let parity = k % 2;
    bernstein_sum(m, 0..=m, |j| Ok(fact(2 * j + parity) * v(m, j)?))
}

/// `R̂_k(x)` from `V`: `x (1+x)^e sum_j 2^j (2j + k mod 2)! V(m,j) x^j (1-x)^(m-j)`
/// with `m = floor(k/2)` and `e = m - 1` for even `k`, `e = m` for odd `k`.
pub fn signed_runs(k: usize) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::unsupported(
            "signed run closed form requires index >= 1, got",
            k,
        ));
    }
    let m = k / 2;
    let parity = k % 2;
    let e = if parity == 1 { m } else { m - 1 };
    let sum = bernstein_sum(m, 0..=m, |j| {
        Ok(pow2(j as i64) * fact(2 * j + parity) * v(m, j)?)
    })?;
    Ok((one_plus_x().pow(e as u32) * sum).shift(1))
}

/// `sum_j w(j) (1+x^2)^j`.
fn tan_sec_sum(
    js: impl Iterator<Item = usize>,
    weight: impl Fn(usize) -> Result<Rational>,
) -> Result<Polynomial> {
    let base = one_plus_x2();
    let mut acc = Polynomial::zero();
    let mut power = Polynomial::one();
    let mut at = 0;
    for j in js {
        while at < j {
            power = &power * &base;
            at += 1;
        }
        acc += &power.scale(&weight(j)?);
    }
    Ok(acc)
}

/// Derivative polynomial of tangent `Q_k(x)` for `k >= 1`, from `U`.
pub fn tangent_derivative(k: usize) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::unsupported(
            "tangent closed form requires index >= 1, got",
            k,
        ));
    }
    let n = k.div_ceil(2);
    let odd = k % 2 == 1;
    let sum = tan_sec_sum(1..=n, |j| {
        let f = if odd { fact(2 * j - 1) } else { fact(2 * j) };
        Ok(rat(sign((n - j) as i64)) * pow2(2 * (n - j) as i64) * f * u(n, j)?)
    })?;
    Ok(if odd { sum } else { sum.shift(1) })
}

/// Derivative polynomial of secant `Q̂_k(x)` for `k >= 0`, from `V`.
pub fn secant_derivative(k: usize) -> Result<Polynomial> {
    let n = k / 2;
    let parity = k % 2;
    let sum = tan_sec_sum(0..=n, |j| {
        Ok(rat(sign((n - j) as i64)) * fact(2 * j + parity) * v(n, j)?)
    })?;
    Ok(if parity == 1 { sum.shift(1) } else { sum })
}

/// `E_k` as a signed sum over `U` (odd `k`) or `V` (even `k`).
pub fn euler_number(k: usize) -> Result<Integer> {
    let mut acc = Rational::zero();
    if k % 2 == 1 {
        let n = k.div_ceil(2);
        for j in 1..=n {
            acc +=
                rat(sign((n - j) as i64)) * pow2(2 * (n - j) as i64) * fact(2 * j - 1) * u(n, j)?;
        }
    } else {
        let n = k / 2;
        for j in 0..=n {
            acc += rat(sign((n - j) as i64)) * fact(2 * j) * v(n, j)?;
        }
    }
    expect_integer(&acc, "Euler number closed form")
}

/// `s_k` as a signed sum over `V`.
pub fn springer_number(k: usize) -> Result<Integer> {
    let n = k / 2;
    let parity = k % 2;
    let mut acc = Rational::zero();
    for j in 0..=n {
        acc += rat(sign((n - j) as i64)) * fact(2 * j + parity) * pow2(j as i64) * v(n, j)?;
    }
    expect_integer(&acc, "Springer number closed form")
}

/// The `order`-th derivative of `csc^2` in the `c`/`t` ring, from `U`:
/// for `order = 2n-2` the even part `sum_j (-1)^(n-j) 2^(2n-2j) (2j-1)! U(n,j) c^j`,
/// for `order = 2n-1` the odd part `sum_j (-1)^(n-j+1) 2^(2n-2j) (2j)! U(n,j) c^j`.
pub fn csc_squared_derivative(order: usize) -> Result<crate::algebra::CotCscExpression> {
    let odd = order % 2 == 1;
    let n = if odd {
        order.div_ceil(2)
    } else {
        order / 2 + 1
    };
    let mut acc = Polynomial::zero();
    for j in 1..=n {
        let (s, f) = if odd {
            (sign((n - j + 1) as i64), fact(2 * j))
        } else {
            (sign((n - j) as i64), fact(2 * j - 1))
        };
        let c = rat(s) * pow2(2 * (n - j) as i64) * f * u(n, j)?;
        acc += &Polynomial::monomial(c, j);
    }
    Ok(if odd {
        crate::algebra::CotCscExpression::new(Polynomial::zero(), acc)
    } else {
        crate::algebra::CotCscExpression::new(acc, Polynomial::zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn small_run_polynomials() {
        assert_eq!(runs_odd(2).unwrap(), p(&[0, 2, 4]));
        assert_eq!(runs_even(1).unwrap(), p(&[0, 2]));
        assert_eq!(runs_even(2).unwrap(), p(&[0, 2, 12, 10]));
        assert_eq!(runs_odd(3).unwrap(), p(&[0, 2, 28, 58, 32]));
        assert!(runs_odd(1).is_err());
    }

    #[test]
    fn small_peak_polynomials() {
        assert_eq!(x_times_peak(1).unwrap(), p(&[0, 1]));
        assert_eq!(x_times_peak(2).unwrap(), p(&[0, 2]));
        assert_eq!(x_times_peak(3).unwrap(), p(&[0, 4, 2]));
        assert_eq!(x_times_peak(4).unwrap(), p(&[0, 8, 16]));
        assert_eq!(x_times_peak(5).unwrap(), p(&[0, 16, 88, 16]));
        assert_eq!(left_peak(4).unwrap(), p(&[1, 18, 5]));
        assert_eq!(left_peak(5).unwrap(), p(&[1, 58, 61]));
        assert_eq!(left_peak(1).unwrap(), p(&[1]));
    }

    #[test]
    fn small_derivative_polynomials() {
        assert_eq!(tangent_derivative(1).unwrap(), p(&[1, 0, 1]));
        assert_eq!(tangent_derivative(2).unwrap(), p(&[0, 2, 0, 2]));
        assert_eq!(tangent_derivative(3).unwrap(), p(&[2, 0, 8, 0, 6]));
        assert_eq!(secant_derivative(0).unwrap(), p(&[1]));
        assert_eq!(secant_derivative(1).unwrap(), p(&[0, 1]));
        assert_eq!(secant_derivative(2).unwrap(), p(&[1, 0, 2]));
    }

    #[test]
    fn small_numbers() {
        let e: Vec<_> = (1..=7).map(|k| euler_number(k).unwrap()).collect();
        assert_eq!(e, [1, 1, 2, 5, 16, 61, 272].map(int));
        let s: Vec<_> = (0..=4).map(|k| springer_number(k).unwrap()).collect();
        assert_eq!(s, [1, 1, 3, 11, 57].map(int));
    }

    #[test]
    fn csc_low_orders() {
        let d0 = csc_squared_derivative(0).unwrap();
        assert_eq!(d0, crate::algebra::CotCscExpression::csc2());
        let d2 = csc_squared_derivative(2).unwrap();
        assert_eq!(d2.even(), &p(&[0, -4, 6]));
        let d1 = csc_squared_derivative(1).unwrap();
        assert_eq!(d1.odd(), &p(&[0, -2]));
    }
}
