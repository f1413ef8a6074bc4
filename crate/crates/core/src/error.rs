use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the constructions built on them.
///
/// Failed identities are not errors: they are reported through
/// [`VerificationReport`](crate::report::VerificationReport) verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder {remainder}")]
    NonExactDivision { remainder: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("homogenization degree {m} is below polynomial degree {degree}")]
    DegreeExceedsHomogenization { degree: usize, m: usize },

    #[error("series denominator has no invertible constant term")]
    NonUnitDenominator,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,

    #[error("series orders differ ({left} vs {right}); truncate explicitly first")]
    OrderMismatch { left: usize, right: usize },

    #[error("expected an integer but got {value} in {context}")]
    IntegralityViolation { context: String, value: String },

    #[error("unsupported index {index} for {what}")]
    UnsupportedIndex { what: String, index: i64 },

    #[error("{what}: {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: String,
        value: usize,
        bound: usize,
    },

    #[error("statistic {statistic} does not apply to {kind} words")]
    KindMismatch {
        statistic: &'static str,
        kind: &'static str,
    },

    #[error("invalid word: {0}")]
    InvalidWord(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn unsupported(what: impl Into<String>, index: impl TryInto<i64>) -> Self {
        Error::UnsupportedIndex {
            what: what.into(),
            index: index.try_into().unwrap_or(i64::MAX),
        }
    }

    pub(crate) fn bound(what: impl Into<String>, value: usize, bound: usize) -> Self {
        Error::BoundExceeded {
            what: what.into(),
            value,
            bound,
        }
    }
}
