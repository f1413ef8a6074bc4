//! Brute-force permutation statistics over the symmetric group and the
//! hyperoctahedral group. These are the ground truth the polynomial
//! families are checked against.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Integer;
use crate::error::{Error, Result};

/// Largest `n` enumerated over the symmetric group.
pub const SYMMETRIC_BOUND: usize = 10;
/// Largest `n` enumerated over signed permutations.
pub const SIGNED_BOUND: usize = 7;

/// A word containing each of `1..=n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<i32>);

impl Permutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v < 1 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidWord(format!("{word:?} is not a permutation")));
            }
        }
        Ok(Self(word))
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }
}

/// A word of nonzero integers whose absolute values form a permutation.
/// The implicit `pi(0) = 0` is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        Permutation::new(word.iter().map(|v| v.abs()).collect())
            .map_err(|_| Error::InvalidWord(format!("{word:?} is not a signed permutation")))?;
        Ok(Self(word))
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }
}

/// Either kind of word.
#[derive(Clone, Copy, Debug)]
pub enum Word<'a> {
    Plain(&'a Permutation),
    Signed(&'a SignedPermutation),
}

impl<'a> From<&'a Permutation> for Word<'a> {
    fn from(p: &'a Permutation) -> Self {
        Word::Plain(p)
    }
}

impl<'a> From<&'a SignedPermutation> for Word<'a> {
    fn from(p: &'a SignedPermutation) -> Self {
        Word::Signed(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    AltRuns,
    Pk,
    Lpk,
    SignedRuns,
    IsSnake,
    IsZigzag,
}

impl Statistic {
    fn name(self) -> &'static str {
        match self {
            Statistic::AltRuns => "alt_runs",
            Statistic::Pk => "pk",
            Statistic::Lpk => "lpk",
            Statistic::SignedRuns => "signed_runs",
            Statistic::IsSnake => "is_snake",
            Statistic::IsZigzag => "is_zigzag",
        }
    }
}

/// Number of maximal monotone segments; zero for words shorter than two.
pub fn alternating_runs(w: &[i32]) -> usize {
    if w.len() < 2 {
        return 0;
    }
    1 + w
        .windows(3)
        .filter(|t| (t[0] < t[1]) != (t[1] < t[2]))
        .count()
}

/// Interior peaks: `1 <= i <= n-2` (0-based) with `w[i-1] < w[i] > w[i+1]`.
pub fn peaks(w: &[i32]) -> usize {
    w.windows(3).filter(|t| t[0] < t[1] && t[1] > t[2]).count()
}

/// Peaks of `0 w(1) ... w(n)` at positions `1..=n-1`.
pub fn left_peaks(w: &[i32]) -> usize {
    match w.first() {
        None => 0,
        Some(&first) => usize::from(w.len() > 1 && first > w[1]) + peaks(w),
    }
}

/// Alternating runs of `0 w(1) ... w(n)`.
pub fn signed_runs(w: &[i32]) -> usize {
    match w.len() {
        0 => 0,
        1 => 1,
        _ => alternating_runs(w) + usize::from((0 < w[0]) != (w[0] < w[1])),
    }
}

/// `w(1) > w(2) < w(3) > ...`.
pub fn is_down_up(w: &[i32]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

/// `0 < w(1) > w(2) < w(3) > ...`.
pub fn is_snake(w: &[i32]) -> bool {
    w.first().is_none_or(|&f| f > 0) && is_down_up(w)
}

/// Value of a statistic on a word of the matching kind.
pub fn stat_of<'a>(word: impl Into<Word<'a>>, statistic: Statistic) -> Result<usize> {
    let word = word.into();
    let mismatch = |kind| Error::KindMismatch {
        statistic: statistic.name(),
        kind,
    };
    match (word, statistic) {
        (Word::Plain(p), Statistic::AltRuns) => Ok(alternating_runs(p.word())),
        (Word::Plain(p), Statistic::Pk) => Ok(peaks(p.word())),
        (Word::Plain(p), Statistic::Lpk) => Ok(left_peaks(p.word())),
        (Word::Plain(p), Statistic::IsZigzag) => Ok(usize::from(is_down_up(p.word()))),
        (Word::Signed(s), Statistic::SignedRuns) => Ok(signed_runs(s.word())),
        (Word::Signed(s), Statistic::IsSnake) => Ok(usize::from(is_snake(s.word()))),
        (Word::Plain(_), _) => Err(mismatch("unsigned")),
        (Word::Signed(_), _) => Err(mismatch("signed")),
    }
}

/// Distribution-valued statistics computed by exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatistic {
    AltRuns,
    Pk,
    Lpk,
    SignedRunsUp,
    SnakeCount,
    ZigzagCount,
}

impl RowStatistic {
    pub const ALL: [RowStatistic; 6] = [
        RowStatistic::AltRuns,
        RowStatistic::Pk,
        RowStatistic::Lpk,
        RowStatistic::SignedRunsUp,
        RowStatistic::SnakeCount,
        RowStatistic::ZigzagCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RowStatistic::AltRuns => "alt_runs",
            RowStatistic::Pk => "pk",
            RowStatistic::Lpk => "lpk",
            RowStatistic::SignedRunsUp => "signed_runs_up",
            RowStatistic::SnakeCount => "snake_count",
            RowStatistic::ZigzagCount => "zigzag_count",
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, RowStatistic::SignedRunsUp | RowStatistic::SnakeCount)
    }

    pub fn bound(self) -> usize {
        if self.is_signed() {
            SIGNED_BOUND
        } else {
            SYMMETRIC_BOUND
        }
    }
}

impl fmt::Display for RowStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RowStatistic {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown statistic '{s}'"))
    }
}

/// Counts indexed by statistic value, starting at 0. Totals
/// (snake and zigzag counts) are a single entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRow {
    pub n: usize,
    pub statistic: RowStatistic,
    pub counts: Vec<Integer>,
}

impl StatRow {
    pub fn total(&self) -> Integer {
        self.counts.iter().sum()
    }
}

/// Lexicographic successor in place; `false` once `w` is the last word.
pub fn next_permutation(w: &mut [i32]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w
        .iter()
        .rposition(|&v| v > w[i])
        .expect("pivot has a successor");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// Visits every permutation of `[n]` starting with `first`, in lexicographic order.
fn for_each_with_first(n: usize, first: i32, mut visit: impl FnMut(&[i32])) {
    let mut w: Vec<i32> = std::iter::once(first)
        .chain((1..=n as i32).filter(|&v| v != first))
        .collect();
    loop {
        visit(&w);
        if !next_permutation(&mut w[1..]) {
            break;
        }
    }
}

/// Tallies `score(word)` over `S_n`, sharded by first letter across workers.
/// `score` returns `(bucket, weight)` pairs via the sink.
fn tally_symmetric<F>(n: usize, width: usize, score: F) -> Vec<u64>
where
    F: Fn(&[i32], &mut Vec<u64>) + Sync,
{
    if n == 0 {
        let mut counts = vec![0u64; width];
        score(&[], &mut counts);
        return counts;
    }
    (1..=n as i32)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; width];
            for_each_with_first(n, first, |w| score(w, &mut counts));
            counts
        })
        .reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

fn signed_tally<F>(n: usize, width: usize, visit: F) -> Vec<u64>
where
    F: Fn(&[i32], &mut Vec<u64>) + Sync,
{
    tally_symmetric(n, width, |w, counts| {
        let mut signed = w.to_vec();
        for mask in 0u32..(1 << n) {
            for (i, v) in signed.iter_mut().enumerate() {
                *v = if mask >> i & 1 == 1 { -w[i] } else { w[i] };
            }
            visit(&signed, counts);
        }
    })
}

/// Exhaustive distribution of a statistic over `S_n` (or over up signed
/// permutations / all of `B_n` for the signed statistics).
pub fn oracle_row(n: usize, statistic: RowStatistic) -> Result<StatRow> {
    let bound = statistic.bound();
    if n > bound {
        return Err(Error::bound(format!("{statistic} oracle n"), n, bound));
    }
    let width = n + 1;
    let counts = match statistic {
        RowStatistic::AltRuns => tally_symmetric(n, width, |w, c| c[alternating_runs(w)] += 1),
        RowStatistic::Pk => tally_symmetric(n, width, |w, c| c[peaks(w)] += 1),
        RowStatistic::Lpk => tally_symmetric(n, width, |w, c| c[left_peaks(w)] += 1),
        RowStatistic::ZigzagCount => tally_symmetric(n, 1, |w, c| c[0] += u64::from(is_down_up(w))),
        RowStatistic::SignedRunsUp => signed_tally(n, width, |w, c| {
            if w.first().is_none_or(|&f| f > 0) {
                c[signed_runs(w)] += 1;
            }
        }),
        RowStatistic::SnakeCount => signed_tally(n, 1, |w, c| c[0] += u64::from(is_snake(w))),
    };
    let mut counts: Vec<Integer> = counts.into_iter().map(Integer::from).collect();
    if !matches!(
        statistic,
        RowStatistic::SnakeCount | RowStatistic::ZigzagCount
    ) {
        while counts.len() > 1 && counts.last().is_some_and(|c| *c == Integer::ZERO) {
            counts.pop();
        }
    }
    Ok(StatRow {
        n,
        statistic,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factorial, int};

    fn perm(w: &[i32]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// All permutations by recursive insertion, independent of the
    /// lexicographic successor.
    fn all_perms(n: i32) -> Vec<Vec<i32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn word_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![-2, 1]).is_ok());
    }

    #[test]
    fn stat_examples() {
        assert_eq!(stat_of(&perm(&[1, 3, 2]), Statistic::AltRuns).unwrap(), 2);
        assert_eq!(stat_of(&perm(&[1, 2, 3]), Statistic::AltRuns).unwrap(), 1);
        assert_eq!(stat_of(&perm(&[1]), Statistic::AltRuns).unwrap(), 0);
        assert_eq!(stat_of(&perm(&[2, 1, 3]), Statistic::Lpk).unwrap(), 1);
        assert_eq!(stat_of(&perm(&[2, 1, 3]), Statistic::Pk).unwrap(), 0);
        let s = SignedPermutation::new(vec![1, -2]).unwrap();
        assert_eq!(stat_of(&s, Statistic::SignedRuns).unwrap(), 2);
        assert_eq!(stat_of(&s, Statistic::IsSnake).unwrap(), 1);
        assert!(matches!(
            stat_of(&s, Statistic::Pk),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            stat_of(&perm(&[1, 2]), Statistic::SignedRuns),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn left_peak_row_matches_small_polynomial() {
        // 1 + 5x
        let row = oracle_row(3, RowStatistic::Lpk).unwrap();
        assert_eq!(row.counts, ints(&[1, 5]));
    }

    #[test]
    fn row_examples() {
        assert_eq!(
            oracle_row(4, RowStatistic::AltRuns).unwrap().counts,
            ints(&[0, 2, 12, 10])
        );
        assert_eq!(
            oracle_row(2, RowStatistic::SignedRunsUp).unwrap().counts,
            ints(&[0, 1, 3])
        );
        assert_eq!(
            oracle_row(4, RowStatistic::ZigzagCount).unwrap().counts,
            ints(&[5])
        );
        assert_eq!(
            oracle_row(1, RowStatistic::AltRuns).unwrap().counts,
            ints(&[1])
        );
        assert_eq!(
            oracle_row(2, RowStatistic::SnakeCount).unwrap().counts,
            ints(&[3])
        );
        assert_eq!(
            oracle_row(3, RowStatistic::SnakeCount).unwrap().counts,
            ints(&[11])
        );
        assert!(matches!(
            oracle_row(11, RowStatistic::Pk),
            Err(Error::BoundExceeded { bound: 10, .. })
        ));
        assert!(matches!(
            oracle_row(8, RowStatistic::SnakeCount),
            Err(Error::BoundExceeded { bound: 7, .. })
        ));
    }

    #[test]
    fn lexicographic_enumeration_is_complete() {
        for n in 0..=7 {
            let mut seen = std::collections::BTreeSet::new();
            for first in 1..=n {
                for_each_with_first(n as usize, first, |w| {
                    assert!(seen.insert(w.to_vec()));
                });
            }
            let expected: std::collections::BTreeSet<_> = all_perms(n).into_iter().collect();
            if n > 0 {
                assert_eq!(seen, expected);
            }
        }
    }

    #[test]
    fn rows_agree_with_naive_enumeration() {
        for n in 1..=7usize {
            let perms = all_perms(n as i32);
            let tally = |f: &dyn Fn(&[i32]) -> usize| {
                let mut c = vec![0u64; n + 1];
                for p in &perms {
                    c[f(p)] += 1;
                }
                let mut c: Vec<Integer> = c.into_iter().map(Integer::from).collect();
                while c.len() > 1 && c.last() == Some(&int(0)) {
                    c.pop();
                }
                c
            };
            assert_eq!(
                oracle_row(n, RowStatistic::AltRuns).unwrap().counts,
                tally(&alternating_runs)
            );
            assert_eq!(
                oracle_row(n, RowStatistic::Pk).unwrap().counts,
                tally(&peaks)
            );
            assert_eq!(
                oracle_row(n, RowStatistic::Lpk).unwrap().counts,
                tally(&left_peaks)
            );
        }
    }

    #[test]
    fn row_totals_and_maxima() {
        for n in 2..=8usize {
            let total = factorial(n as u64);
            assert_eq!(oracle_row(n, RowStatistic::AltRuns).unwrap().total(), total);
            let pk = oracle_row(n, RowStatistic::Pk).unwrap();
            assert_eq!(pk.counts.len() - 1, (n - 1) / 2);
            let lpk = oracle_row(n, RowStatistic::Lpk).unwrap();
            assert_eq!(lpk.counts.len() - 1, n / 2);
        }
        for n in 1..=6usize {
            let up = oracle_row(n, RowStatistic::SignedRunsUp).unwrap();
            assert_eq!(up.total(), factorial(n as u64) << (n - 1));
        }
    }

    #[test]
    fn reversal_preserves_runs() {
        for p in all_perms(6) {
            let mut r = p.clone();
            r.reverse();
            assert_eq!(alternating_runs(&p), alternating_runs(&r));
        }
    }

    #[test]
    fn zigzag_count_is_convention_independent() {
        for n in 0..=8 {
            let up_down = all_perms(n)
                .iter()
                .filter(|w| {
                    w.windows(2)
                        .enumerate()
                        .all(|(i, p)| if i % 2 == 0 { p[0] < p[1] } else { p[0] > p[1] })
                })
                .count();
            let row = oracle_row(n as usize, RowStatistic::ZigzagCount).unwrap();
            assert_eq!(row.counts, vec![Integer::from(up_down)]);
        }
    }

    #[test]
    fn parallel_sharding_is_deterministic() {
        let a = oracle_row(8, RowStatistic::AltRuns).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| oracle_row(8, RowStatistic::AltRuns).unwrap());
        assert_eq!(a, b);
    }
}
