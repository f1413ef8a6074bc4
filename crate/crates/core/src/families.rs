//! The six polynomial families and the Euler/Springer sequences.
//!
//! | family | route |
//! |--------|-------|
//! | `R`    | `R_{n+2} = x(nx+2) R_{n+1} + x(1-x^2) R_{n+1}'`, `R_1 = 1`, `R_2 = 2x` |
//! | `PHAT` | `P̂_{n+1} = (nx+1) P̂_n + 2x(1-x) P̂_n'`, `P̂_1 = 1` |
//! | `Q`    | `Q_{n+1} = (1+x^2) Q_n'`, `Q_0 = x` |
//! | `QHAT` | `Q̂_{n+1} = (1+x^2) Q̂_n' + x Q̂_n`, `Q̂_0 = 1` |
//! | `P`    | `U`-closed form for `x P_n`, divided exactly by `x` |
//! | `RHAT` | `x (1+x)^(n-1) P̂_n(2x/(1+x))` |
//!
//! `R_1 = 1` encodes the single permutation of `[1]` having zero runs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{expect_integer, int, rat, Integer, Polynomial};
use crate::closed_form;
use crate::error::{Error, Result};
use crate::memo::Ladder;
use crate::triangles::Triangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyId {
    R,
    P,
    PHat,
    RHat,
    Q,
    QHat,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::R,
        FamilyId::P,
        FamilyId::PHat,
        FamilyId::RHat,
        FamilyId::Q,
        FamilyId::QHat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::R => "R",
            FamilyId::P => "P",
            FamilyId::PHat => "PHAT",
            FamilyId::RHat => "RHAT",
            FamilyId::Q => "Q",
            FamilyId::QHat => "QHAT",
        }
    }

    /// Smallest supported index.
    pub fn first_index(self) -> usize {
        match self {
            FamilyId::Q | FamilyId::QHat => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialId {
    Euler,
    Springer,
}

static R_LADDER: Ladder<Polynomial> = Ladder::new();
static PHAT_LADDER: Ladder<Polynomial> = Ladder::new();
static Q_LADDER: Ladder<Polynomial> = Ladder::new();
static QHAT_LADDER: Ladder<Polynomial> = Ladder::new();
static P_LADDER: Ladder<Polynomial> = Ladder::new();
static RHAT_LADDER: Ladder<Polynomial> = Ladder::new();

fn alternating_runs(n: usize) -> Polynomial {
    let step = R_LADDER.get(n, |k, prev| match k {
        // index 0 is never handed out
        0 => Polynomial::zero(),
        1 => Polynomial::one(),
        2 => Polynomial::from_ints(&[0, 2]),
        _ => {
            let r = &prev[k - 1];
            let m = (k - 3) as i64;
            let a = Polynomial::from_ints(&[0, 2, m + 1]);
            let b = Polynomial::from_ints(&[0, 1, 0, -1]);
            // x((k-2)x + 2) R_{k-1} + x(1 - x^2) R_{k-1}'
            &a * r + &b * &r.derivative()
        }
    });
    (*step).clone()
}

fn left_peaks(n: usize) -> Polynomial {
    let step = PHAT_LADDER.get(n, |k, prev| match k {
        0 => Polynomial::zero(),
        1 => Polynomial::one(),
        _ => {
            let p = &prev[k - 1];
            let a = Polynomial::from_ints(&[1, (k - 1) as i64]);
            let b = Polynomial::from_ints(&[0, 2, -2]);
            &a * p + &b * &p.derivative()
        }
    });
    (*step).clone()
}

fn tangent_derivative(n: usize) -> Polynomial {
    let step = Q_LADDER.get(n, |k, prev| {
        if k == 0 {
            Polynomial::x()
        } else {
            Polynomial::from_ints(&[1, 0, 1]) * prev[k - 1].derivative()
        }
    });
    (*step).clone()
}

fn secant_derivative(n: usize) -> Polynomial {
    let step = QHAT_LADDER.get(n, |k, prev| {
        if k == 0 {
            Polynomial::one()
        } else {
            let q = &prev[k - 1];
            Polynomial::from_ints(&[1, 0, 1]) * q.derivative() + Polynomial::x() * &**q
        }
    });
    (*step).clone()
}

fn peaks(n: usize) -> Result<Polynomial> {
    let step = P_LADDER.try_get(n, |k, _| {
        if k == 0 {
            return Ok(Polynomial::zero());
        }
        closed_form::x_times_peak(k)?.divexact(&Polynomial::x())
    })?;
    Ok((*step).clone())
}

fn signed_runs(n: usize) -> Result<Polynomial> {
    let step = RHAT_LADDER.try_get(n, |k, _| {
        if k == 0 {
            return Ok(Polynomial::zero());
        }
        let (two, zero, one) = (int(2), int(0), int(1));
        Ok(left_peaks(k)
            .substitute_linear_fraction(&two, &zero, &one, &one, k - 1)?
            .shift(1))
    })?;
    Ok((*step).clone())
}

/// The `n`-th member of a family.
pub fn family_poly(id: FamilyId, n: usize) -> Result<Polynomial> {
    if n < id.first_index() {
        return Err(Error::unsupported(format!("family {id} index"), n));
    }
    match id {
        FamilyId::R => Ok(alternating_runs(n)),
        FamilyId::PHat => Ok(left_peaks(n)),
        FamilyId::Q => Ok(tangent_derivative(n)),
        FamilyId::QHat => Ok(secant_derivative(n)),
        FamilyId::P => peaks(n),
        FamilyId::RHat => signed_runs(n),
    }
}

/// `E_n` via `Q_n(0)` (odd `n`) or `Q̂_n(0)` (even `n`); `s_n` via `Q̂_n(1)`.
pub fn special_number(id: SpecialId, n: usize) -> Result<Integer> {
    let value = match id {
        SpecialId::Euler if n % 2 == 1 => tangent_derivative(n).eval(&rat(0)),
        SpecialId::Euler => secant_derivative(n).eval(&rat(0)),
        SpecialId::Springer => secant_derivative(n).eval(&rat(1)),
    };
    expect_integer(&value, "special number")
}

/// `R(n,k)` for `n = 2..=rows+1`, `k = 1..=n-1`.
pub(crate) fn alternating_runs_triangle(rows: usize) -> Result<Triangle> {
    let rows = (2..rows + 2)
        .map(|n| {
            let coeffs = alternating_runs(n).to_integers("R(n,k)")?;
            Ok(coeffs[1..].to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle::new("R", 2, 1, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_poly(FamilyId::R, 5).unwrap(), p(&[0, 2, 28, 58, 32]));
        assert_eq!(family_poly(FamilyId::R, 1).unwrap(), p(&[1]));
        assert_eq!(family_poly(FamilyId::PHat, 5).unwrap(), p(&[1, 58, 61]));
        assert_eq!(family_poly(FamilyId::Q, 3).unwrap(), p(&[2, 0, 8, 0, 6]));
        assert_eq!(family_poly(FamilyId::QHat, 2).unwrap(), p(&[1, 0, 2]));
        assert_eq!(family_poly(FamilyId::RHat, 2).unwrap(), p(&[0, 1, 3]));
        assert_eq!(family_poly(FamilyId::P, 4).unwrap(), p(&[8, 16]));
        assert!(matches!(
            family_poly(FamilyId::R, 0),
            Err(Error::UnsupportedIndex { .. })
        ));
        assert!(family_poly(FamilyId::Q, 0).is_ok());
    }

    #[test]
    fn listed_small_members() {
        assert_eq!(family_poly(FamilyId::R, 2).unwrap(), p(&[0, 2]));
        assert_eq!(family_poly(FamilyId::R, 3).unwrap(), p(&[0, 2, 4]));
        assert_eq!(family_poly(FamilyId::R, 4).unwrap(), p(&[0, 2, 12, 10]));
        assert_eq!(family_poly(FamilyId::PHat, 2).unwrap(), p(&[1, 1]));
        assert_eq!(family_poly(FamilyId::PHat, 3).unwrap(), p(&[1, 5]));
        assert_eq!(family_poly(FamilyId::PHat, 4).unwrap(), p(&[1, 18, 5]));
    }

    #[test]
    fn special_examples() {
        assert_eq!(special_number(SpecialId::Euler, 5).unwrap(), int(16));
        assert_eq!(special_number(SpecialId::Euler, 0).unwrap(), int(1));
        assert_eq!(special_number(SpecialId::Springer, 4).unwrap(), int(57));
        let e: Vec<_> = (0..=5)
            .map(|n| special_number(SpecialId::Euler, n).unwrap())
            .collect();
        assert_eq!(e, [1, 1, 1, 2, 5, 16].map(int));
    }

    #[test]
    fn evaluations_at_one() {
        let one = rat(1);
        for n in 2..=14usize {
            let nf = crate::algebra::Rational::from_integer(factorial(n as u64));
            assert_eq!(family_poly(FamilyId::R, n).unwrap().eval(&one), nf);
            assert_eq!(family_poly(FamilyId::PHat, n).unwrap().eval(&one), nf);
            assert_eq!(family_poly(FamilyId::P, n).unwrap().eval(&one), nf);
            let up = crate::algebra::Rational::from_integer(factorial(n as u64) << (n - 1));
            assert_eq!(family_poly(FamilyId::RHat, n).unwrap().eval(&one), up);
        }
    }

    #[test]
    fn degrees_and_parity() {
        for n in 2..=20usize {
            assert_eq!(
                family_poly(FamilyId::P, n).unwrap().degree(),
                Some((n - 1) / 2)
            );
            assert_eq!(
                family_poly(FamilyId::PHat, n).unwrap().degree(),
                Some(n / 2)
            );
            assert_eq!(family_poly(FamilyId::R, n).unwrap().degree(), Some(n - 1));
        }
        for n in 0..=20usize {
            assert!(family_poly(FamilyId::Q, n).unwrap().has_parity(n + 1));
            assert!(family_poly(FamilyId::QHat, n).unwrap().has_parity(n));
        }
    }

    #[test]
    fn concurrent_first_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| family_poly(FamilyId::QHat, 30).unwrap()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn run_triangle_rows() {
        let t = Triangle::build(crate::triangles::TriangleKind::AltRuns, 3).unwrap();
        assert_eq!(t.get(4, 2), int(12));
        let flat: Vec<_> = t.linearize().map(|v| v.to_string()).collect();
        assert_eq!(flat, ["2", "2", "4", "2", "12", "10"]);
    }

    #[test]
    fn from_str_names() {
        assert_eq!("phat".parse::<FamilyId>().unwrap(), FamilyId::PHat);
        assert!("S".parse::<FamilyId>().is_err());
    }
}
