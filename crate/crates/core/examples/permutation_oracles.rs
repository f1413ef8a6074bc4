//! Enumerates permutation statistics and compares them with the families.
//!
//! ```bash
//! cargo run --release --example permutation_oracles
//! ```

use altrun::algebra::Polynomial;
use altrun::families::{family_poly, special_number, FamilyId, SpecialId};
use altrun::perms::{oracle_row, RowStatistic};

pub fn run_up_to(sym: usize, signed: usize) -> altrun::Result<()> {
    let pairs = [
        (RowStatistic::AltRuns, FamilyId::R, 2),
        (RowStatistic::Pk, FamilyId::P, 1),
        (RowStatistic::Lpk, FamilyId::PHat, 1),
    ];
    for (stat, family, first) in pairs {
        for n in first..=sym {
            let row = oracle_row(n, stat)?;
            let same = Polynomial::from_integers(row.counts.clone()) == family_poly(family, n)?;
            println!("{stat:>14} n={n:<2} {family} match={same}");
        }
    }
    for n in 1..=signed {
        let row = oracle_row(n, RowStatistic::SignedRunsUp)?;
        let same = Polynomial::from_integers(row.counts) == family_poly(FamilyId::RHat, n)?;
        let snakes = &oracle_row(n, RowStatistic::SnakeCount)?.counts[0];
        let s = special_number(SpecialId::Springer, n)?;
        println!("signed_runs_up n={n} RHAT match={same}; snakes={snakes} s_{n}={s}");
    }
    for n in 0..=sym {
        let zig = &oracle_row(n, RowStatistic::ZigzagCount)?.counts[0];
        println!(
            "zigzag n={n}: {zig} (E_{n} = {})",
            special_number(SpecialId::Euler, n)?
        );
    }
    Ok(())
}

pub fn run() -> altrun::Result<()> {
    run_up_to(8, 5)
}

fn main() -> altrun::Result<()> {
    run()
}
