//! Shows where the original coefficient formula for `R(2n, k)` goes wrong and
//! that the corrected one (with `N` in place of `M`) matches every entry.
//!
//! ```bash
//! cargo run --example carlitz_defect
//! ```

use altrun::identities::{carlitz_original_diff, Parity};

pub fn run() -> altrun::Result<()> {
    for n in 2..=5 {
        let diff = carlitz_original_diff(n)?;
        print!("{diff}");
        println!(
            "n={n}: truth from {:?}; original mismatches even={} odd={}; {}",
            diff.truth_source,
            diff.original_mismatches(Parity::Even).len(),
            diff.original_mismatches(Parity::Odd).len(),
            diff.corrected_report(),
        );
        println!();
    }
    Ok(())
}

fn main() -> altrun::Result<()> {
    run()
}
