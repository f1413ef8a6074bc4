//! Verdicts for identity checks.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

/// First failing index with both sides rendered, so a regression can be
/// diagnosed from the report alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: usize,
    pub left: String,
    pub right: String,
}

/// Outcome of checking one identity over an inclusive index range.
///
/// `verdict == Pass` exactly when `witness` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: (usize, usize),
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, range: (usize, usize)) -> Self {
        Self {
            identity: identity.into(),
            range,
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(identity: impl Into<String>, range: (usize, usize), witness: Witness) -> Self {
        Self {
            identity: identity.into(),
            range,
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    /// Single-index report comparing two independently built sides.
    pub fn compare<T: PartialEq + fmt::Display>(
        identity: impl Into<String>,
        n: usize,
        left: &T,
        right: &T,
    ) -> Self {
        if left == right {
            Self::pass(identity, (n, n))
        } else {
            Self::fail(
                identity,
                (n, n),
                Witness {
                    index: n,
                    left: left.to_string(),
                    right: right.to_string(),
                },
            )
        }
    }

    /// Compares several equations at one index; the first mismatch is the witness.
    pub fn compare_all<T: PartialEq + fmt::Display>(
        identity: impl Into<String>,
        n: usize,
        pairs: &[(T, T)],
    ) -> Self {
        let identity = identity.into();
        pairs
            .iter()
            .map(|(l, r)| Self::compare(identity.clone(), n, l, r))
            .find(|r| !r.passed())
            .unwrap_or_else(|| Self::pass(identity, (n, n)))
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Folds per-index reports into one report over their combined range.
    pub fn merge(identity: impl Into<String>, reports: &[VerificationReport]) -> Self {
        let identity = identity.into();
        let lo = reports.iter().map(|r| r.range.0).min().unwrap_or(0);
        let hi = reports.iter().map(|r| r.range.1).max().unwrap_or(0);
        match reports.iter().find_map(|r| r.witness.clone()) {
            Some(w) => Self::fail(identity, (lo, hi), w),
            None => Self::pass(identity, (lo, hi)),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.range;
        if lo == hi {
            write!(f, "{} n={lo}", self.identity)?;
        } else {
            write!(f, "{} n={lo}..{hi}", self.identity)?;
        }
        match &self.witness {
            None => write!(f, " PASS"),
            Some(w) => write!(
                f,
                " FAIL at n={}: left = {}; right = {}",
                w.index, w.left, w.right
            ),
        }
    }
}
