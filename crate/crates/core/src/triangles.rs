//! Central factorial numbers `U(n,k)`, `V(n,k)`, Stirling numbers of the
//! second kind, binomials, the `M`/`N` coefficient families, and
//! set-partition oracles for `U` and `V`.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{expect_integer, factorial, int, ipow, Integer, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::memo::Ladder;
use crate::report::VerificationReport;

/// How a central factorial number is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    Explicit,
}

/// Which central factorial family a partition oracle counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfKind {
    U,
    V,
}

/// Largest `n` the `U` partition oracle accepts (partitions of a `2n`-set).
pub const U_ORACLE_BOUND: usize = 5;
/// Largest `n` the `V` partition oracle accepts (partitions of a `2n+1`-set).
pub const V_ORACLE_BOUND: usize = 4;

/// `binom(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(Integer::one(), |acc, i| acc * (n - i) / (i + 1))
}

static STIRLING2: Ladder<Vec<Integer>> = Ladder::new();
static U_ROWS: Ladder<Vec<Integer>> = Ladder::new();
static V_ROWS: Ladder<Vec<Integer>> = Ladder::new();

fn stirling2_row(n: usize) -> Arc<Vec<Integer>> {
    STIRLING2.get(n, |m, prev| {
        if m == 0 {
            return vec![Integer::one()];
        }
        let last = &prev[m - 1];
        (0..=m)
            .map(|k| {
                let keep = if k < m { &last[k] * k } else { Integer::zero() };
                let open = if k > 0 {
                    last[k - 1].clone()
                } else {
                    Integer::zero()
                };
                keep + open
            })
            .collect()
    })
}

/// Number of partitions of an `n`-set into `k` nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    stirling2_row(n)[k].clone()
}

/// Row `n` of `U`, indexed by `k = 0..=n` (entry 0 is zero for `n >= 1`).
/// Row 0 is the degenerate `[1]` that seeds the recurrence.
fn u_row(n: usize) -> Arc<Vec<Integer>> {
    U_ROWS.get(n, |m, prev| {
        if m == 0 {
            return vec![Integer::one()];
        }
        let last = &prev[m - 1];
        (0..=m)
            .map(|k| {
                if k == 0 {
                    return Integer::zero();
                }
                let stay = last.get(k).map_or_else(Integer::zero, |v| v * (k * k));
                stay + &last[k - 1]
            })
            .collect()
    })
}

fn v_row(n: usize) -> Arc<Vec<Integer>> {
    V_ROWS.get(n, |m, prev| {
        if m == 0 {
            return vec![Integer::one()];
        }
        let last = &prev[m - 1];
        (0..=m)
            .map(|k| {
                let odd = 2 * k + 1;
                let stay = last.get(k).map_or_else(Integer::zero, |v| v * (odd * odd));
                let open = if k > 0 {
                    last[k - 1].clone()
                } else {
                    Integer::zero()
                };
                stay + open
            })
            .collect()
    })
}

/// Central factorial number of even indices `U(n,k)`, `n >= 1`.
pub fn u_number(n: usize, k: usize, method: Method) -> Result<Integer> {
    if n == 0 {
        return Err(Error::unsupported("U(n,k) requires n >= 1, got n", n));
    }
    if k == 0 || k > n {
        return Ok(Integer::zero());
    }
    match method {
        Method::Recurrence => Ok(u_row(n)[k].clone()),
        Method::Explicit => {
            let two_k = 2 * k as i64;
            let sum = (0..=two_k).fold(Integer::zero(), |acc, i| {
                let term = binomial(two_k, i) * ipow(&int(k as i64 - i), 2 * n as u32);
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            let value = Rational::new(sum, factorial(two_k as u64));
            expect_integer(&value, &format!("explicit U({n},{k})"))
        }
    }
}

/// Central factorial number of odd indices `V(n,k)`, `n >= 0`.
pub fn v_number(n: usize, k: usize, method: Method) -> Result<Integer> {
    if k > n {
        return Ok(Integer::zero());
    }
    match method {
        Method::Recurrence => Ok(v_row(n)[k].clone()),
        Method::Explicit => {
            let kk = k as i64;
            let sum = (0..=kk).fold(Rational::zero(), |acc, m| {
                let term = Rational::new(
                    ipow(&int(2 * m + 1), 2 * n as u32 + 1) * binomial(2 * kk, kk + m),
                    int(kk + m + 1),
                );
                if (kk - m) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            let scale = factorial(2 * k as u64) * (Integer::one() << (2 * k));
            let value = sum / Rational::from_integer(scale);
            expect_integer(&value, &format!("explicit V({n},{k})"))
        }
    }
}

fn binomial_row(e: usize) -> Vec<Integer> {
    (0..=e).map(|i| binomial(e as i64, i as i64)).collect()
}

fn alternating_binomial_row(e: usize) -> Vec<Integer> {
    (0..=e)
        .map(|i| {
            let b = binomial(e as i64, i as i64);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect()
}

fn convolve(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn check_j(n: usize, j: usize) -> Result<()> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::unsupported(
            format!("M/N coefficients with n={n}, j"),
            j,
        ));
    }
    Ok(())
}

/// `M(n,j,s)` for `s = 0..=2n-2-j`: coefficients of `(1+x)^(n-2) (1-x)^(n-j)`.
pub fn m_coefficients(n: usize, j: usize) -> Result<Vec<Integer>> {
    check_j(n, j)?;
    if n < 2 {
        return Err(Error::unsupported("M(n,j,s) requires n >= 2, got n", n));
    }
    Ok(convolve(
        &binomial_row(n - 2),
        &alternating_binomial_row(n - j),
    ))
}

/// `N(n,j,s)` for `s = 0..=2n-1-j`: coefficients of `(1+x)^(n-1) (1-x)^(n-j)`.
pub fn n_coefficients(n: usize, j: usize) -> Result<Vec<Integer>> {
    check_j(n, j)?;
    Ok(convolve(
        &binomial_row(n - 1),
        &alternating_binomial_row(n - j),
    ))
}

pub fn mn_coefficients(n: usize, j: usize) -> Result<(Vec<Integer>, Vec<Integer>)> {
    Ok((m_coefficients(n, j)?, n_coefficients(n, j)?))
}

/// Checks `x^n = sum_k U(n,k) prod_{i=1..k} (x - (i-1)^2)` by expansion.
pub fn u_basis_identity(n: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::unsupported(
            "U basis identity requires n >= 1, got n",
            n,
        ));
    }
    let mut basis = Polynomial::one();
    let mut rhs = Polynomial::zero();
    for k in 1..=n {
        let shift = Rational::from_integer(int(((k - 1) * (k - 1)) as i64));
        basis = &basis * &Polynomial::linear(Rational::one(), -shift);
        let u = Rational::from_integer(u_number(n, k, Method::Recurrence)?);
        rhs += &basis.scale(&u);
    }
    let lhs = Polynomial::monomial(Rational::one(), n);
    Ok(VerificationReport::compare("u_basis", n, &lhs, &rhs))
}

/// Calls `visit` with the block assignment of every set partition of
/// `size` elements, in restricted-growth-string order.
fn for_each_partition(size: usize, mut visit: impl FnMut(&[usize], usize)) {
    if size == 0 {
        visit(&[], 0);
        return;
    }
    let mut rgs = vec![0usize; size];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0usize; size];
    loop {
        visit(&rgs, prefix_max[size - 1] + 1);
        // advance to the next restricted growth string
        let mut i = size - 1;
        loop {
            if i == 0 {
                return;
            }
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for t in i + 1..size {
                    rgs[t] = 0;
                    prefix_max[t] = prefix_max[t - 1];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Exhaustive set-partition counts: for `U`, partitions of `{±1..±n}` whose
/// blocks contain both `i` and `-i` for their least absolute value `i`
/// (indexed `k = 1..=n`); for `V`, partitions of `[2n+1]` into `2k+1` odd
/// blocks (indexed `k = 0..=n`).
pub fn cf_partition_oracle(kind: CfKind, n: usize) -> Result<Vec<Integer>> {
    match kind {
        CfKind::U => {
            if n > U_ORACLE_BOUND {
                return Err(Error::bound("U partition oracle n", n, U_ORACLE_BOUND));
            }
            if n == 0 {
                return Err(Error::unsupported(
                    "U partition oracle requires n >= 1, got n",
                    n,
                ));
            }
            // element 2(i-1) is +i, element 2(i-1)+1 is -i
            let mut counts = vec![0u64; n + 1];
            for_each_partition(2 * n, |blocks, nblocks| {
                let ok = (0..nblocks).all(|b| {
                    let least = (0..2 * n).find(|&e| blocks[e] == b).map(|e| e / 2);
                    least.is_some_and(|i| blocks[2 * i] == b && blocks[2 * i + 1] == b)
                });
                if ok {
                    counts[nblocks] += 1;
                }
            });
            Ok(counts[1..].iter().map(|&c| Integer::from(c)).collect())
        }
        CfKind::V => {
            if n > V_ORACLE_BOUND {
                return Err(Error::bound("V partition oracle n", n, V_ORACLE_BOUND));
            }
            let size = 2 * n + 1;
            let mut counts = vec![0u64; n + 1];
            let mut sizes = vec![0usize; size];
            for_each_partition(size, |blocks, nblocks| {
                sizes[..nblocks].fill(0);
                for &b in blocks {
                    sizes[b] += 1;
                }
                if sizes[..nblocks].iter().all(|s| s % 2 == 1) {
                    counts[(nblocks - 1) / 2] += 1;
                }
            });
            Ok(counts.into_iter().map(Integer::from).collect())
        }
    }
}

/// Named triangle families exportable as tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TriangleKind {
    U,
    V,
    Stirling2,
    AltRuns,
}

/// Ragged integer table. Row `row_start + r` holds entries for columns
/// `col_start..col_start + rows[r].len()`; everything else is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub name: String,
    pub row_start: usize,
    pub col_start: usize,
    rows: Vec<Vec<Integer>>,
}

impl Triangle {
    pub fn new(
        name: impl Into<String>,
        row_start: usize,
        col_start: usize,
        rows: Vec<Vec<Integer>>,
    ) -> Self {
        Self {
            name: name.into(),
            row_start,
            col_start,
            rows,
        }
    }

    pub fn get(&self, n: usize, k: usize) -> Integer {
        n.checked_sub(self.row_start)
            .and_then(|r| self.rows.get(r))
            .zip(k.checked_sub(self.col_start))
            .and_then(|(row, c)| row.get(c).cloned())
            .unwrap_or_else(Integer::zero)
    }

    /// `(n, row)` pairs in order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[Integer])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| (self.row_start + r, row.as_slice()))
    }

    /// Row-major flattening.
    pub fn linearize(&self) -> impl Iterator<Item = &Integer> {
        self.rows.iter().flatten()
    }

    /// First `rows` rows of the requested family.
    pub fn build(kind: TriangleKind, rows: usize) -> Result<Self> {
        match kind {
            TriangleKind::U => Ok(Self::new(
                "U",
                1,
                1,
                (1..=rows).map(|n| u_row(n)[1..].to_vec()).collect(),
            )),
            TriangleKind::V => Ok(Self::new(
                "V",
                0,
                0,
                (0..rows).map(|n| v_row(n).to_vec()).collect(),
            )),
            TriangleKind::Stirling2 => Ok(Self::new(
                "S2",
                1,
                1,
                (1..=rows).map(|n| stirling2_row(n)[1..].to_vec()).collect(),
            )),
            TriangleKind::AltRuns => crate::families::alternating_runs_triangle(rows),
        }
    }
}
