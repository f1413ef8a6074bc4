//! Exponential generating functions expanded as exact truncated series and
//! compared coefficientwise (after scaling by `n!`) with the families.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Polynomial, Rational, TruncatedSeries, DEFAULT_ORDER};
use crate::error::{Error, Result};
use crate::families::{family_poly, special_number, FamilyId, SpecialId};
use crate::report::VerificationReport;
use crate::triangles::{v_number, Method};

/// Highest truncation order accepted by [`verify_gf`].
pub const MAX_ORDER: usize = DEFAULT_ORDER;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GfId {
    /// `sinh(x sinh z)` against `V(n,k)`
    SinhV,
    /// `tan z + sec z` against `E_n`
    TanSec,
    /// `1/(cos z - sin z)` against `s_n`
    SpringerGf,
    /// `(x + tan z)/(1 - x tan z)` against `Q_n(x)`
    QGf,
    /// `sec z/(1 - x tan z)` against `Q̂_n(x)`
    QhatGf,
}

impl GfId {
    pub const ALL: [GfId; 5] = [
        GfId::SinhV,
        GfId::TanSec,
        GfId::SpringerGf,
        GfId::QGf,
        GfId::QhatGf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfId::SinhV => "sinh_v",
            GfId::TanSec => "tan_sec",
            GfId::SpringerGf => "springer_gf",
            GfId::QGf => "q_gf",
            GfId::QhatGf => "qhat_gf",
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown generating function '{s}'"))
    }
}

fn tan(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::sin(order).div(&TruncatedSeries::cos(order))
}

fn sec(order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::one(order).div(&TruncatedSeries::cos(order))
}

/// The closed-form series of a generating function.
pub fn closed_series(id: GfId, order: usize) -> Result<TruncatedSeries> {
    let x = Polynomial::x();
    match id {
        GfId::SinhV => {
            let inner = TruncatedSeries::sinh(order).scale(&x);
            TruncatedSeries::sinh(order).compose(&inner)
        }
        GfId::TanSec => tan(order)?.add(&sec(order)?),
        GfId::SpringerGf => TruncatedSeries::one(order)
            .div(&TruncatedSeries::cos(order).sub(&TruncatedSeries::sin(order))?),
        GfId::QGf => {
            let t = tan(order)?;
            let num = TruncatedSeries::constant(order, x.clone()).add(&t)?;
            let den = TruncatedSeries::one(order).sub(&t.scale(&x))?;
            num.div(&den)
        }
        GfId::QhatGf => {
            let den = TruncatedSeries::one(order).sub(&tan(order)?.scale(&x))?;
            sec(order)?.div(&den)
        }
    }
}

/// The independently built `n!`-scaled coefficient expected at `z^n`.
pub fn expected_coefficient(id: GfId, n: usize) -> Result<Polynomial> {
    Ok(match id {
        GfId::SinhV if n.is_multiple_of(2) => Polynomial::zero(),
        GfId::SinhV => {
            let m = n / 2;
            let mut p = Polynomial::zero();
            for k in 0..=m {
                let v = Rational::from_integer(v_number(m, k, Method::Recurrence)?);
                p += &Polynomial::monomial(v, 2 * k + 1);
            }
            p
        }
        GfId::TanSec => {
            Polynomial::constant(Rational::from_integer(special_number(SpecialId::Euler, n)?))
        }
        GfId::SpringerGf => Polynomial::constant(Rational::from_integer(special_number(
            SpecialId::Springer,
            n,
        )?)),
        GfId::QGf => family_poly(FamilyId::Q, n)?,
        GfId::QhatGf => family_poly(FamilyId::QHat, n)?,
    })
}

/// Expands the generating function to `order` and checks every coefficient.
pub fn verify_gf(id: GfId, order: usize) -> Result<VerificationReport> {
    if order > MAX_ORDER {
        return Err(Error::bound(format!("{id} series order"), order, MAX_ORDER));
    }
    let series = closed_series(id, order)?;
    let reports = (0..=order)
        .map(|n| {
            Ok(VerificationReport::compare(
                id.name(),
                n,
                &series.egf_coeff(n),
                &expected_coefficient(id, n)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merge(id.name(), &reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn gf_examples() {
        let s = closed_series(GfId::SinhV, 7).unwrap();
        assert_eq!(s.egf_coeff(5), Polynomial::from_ints(&[0, 1, 0, 10, 0, 1]));
        assert!(verify_gf(GfId::SinhV, 7).unwrap().passed());

        let t = closed_series(GfId::TanSec, 8).unwrap();
        assert_eq!(t.egf_coeff(3), Polynomial::from_ints(&[2]));
        assert!(verify_gf(GfId::TanSec, 8).unwrap().passed());

        assert!(verify_gf(GfId::SpringerGf, 8).unwrap().passed());
        assert_eq!(special_number(SpecialId::Springer, 2).unwrap(), int(3));
        assert_eq!(special_number(SpecialId::Springer, 3).unwrap(), int(11));

        let q = closed_series(GfId::QGf, 10).unwrap();
        assert_eq!(q.egf_coeff(3), Polynomial::from_ints(&[2, 0, 8, 0, 6]));
        assert!(verify_gf(GfId::QGf, 10).unwrap().passed());
        assert!(verify_gf(GfId::QhatGf, 10).unwrap().passed());
    }

    #[test]
    fn order_bound() {
        assert!(matches!(
            verify_gf(GfId::TanSec, 25),
            Err(Error::BoundExceeded { bound: 24, .. })
        ));
    }

    #[test]
    fn sinh_parity_structure() {
        let s = closed_series(GfId::SinhV, 13).unwrap();
        for n in 0..=13 {
            let c = s.coeff(n);
            if n % 2 == 0 {
                assert!(c.is_zero());
            } else {
                assert!(c.has_parity(1));
            }
        }
    }

    #[test]
    fn truncation_consistency() {
        for id in GfId::ALL {
            let long = closed_series(id, 14).unwrap();
            let short = closed_series(id, 9).unwrap();
            assert_eq!(long.truncate(9).unwrap(), short);
        }
    }

    #[test]
    fn tan_sec_splits_into_q_constants() {
        let t = closed_series(GfId::TanSec, 16).unwrap();
        let zero = Rational::from_integer(int(0));
        for n in 0..=16 {
            let expected = if n % 2 == 1 {
                family_poly(FamilyId::Q, n).unwrap().eval(&zero)
            } else {
                family_poly(FamilyId::QHat, n).unwrap().eval(&zero)
            };
            assert_eq!(t.egf_coeff(n).coeff(0), expected);
        }
    }
}
