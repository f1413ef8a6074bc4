//! Sweeps every identity over a range of indices.
//!
//! ```bash
//! cargo run --release --example verify_theorems -- 20
//! ```

use altrun::identities::{verify_range, IdentityId};
use altrun::report::VerificationReport;

pub fn run_to(max_n: usize) -> altrun::Result<bool> {
    let mut all_ok = true;
    for id in IdentityId::ALL {
        let hi = id.max_index().map_or(max_n, |cap| cap.min(max_n));
        let reports = verify_range(id, id.min_index(), hi)?;
        let merged = VerificationReport::merge(id.name(), &reports);
        all_ok &= merged.passed();
        println!("{merged}");
    }
    Ok(all_ok)
}

pub fn run() -> altrun::Result<()> {
    run_to(10).map(|_| ())
}

fn main() -> altrun::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    let ok = run_to(max_n)?;
    if !ok {
        std::process::exit(1);
    }
    Ok(())
}
