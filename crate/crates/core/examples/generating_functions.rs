//! Expands the exponential generating functions as exact series and checks
//! them against the families.
//!
//! ```bash
//! cargo run --example generating_functions
//! ```

use altrun::gf::{closed_series, verify_gf, GfId, MAX_ORDER};

pub fn run() -> altrun::Result<()> {
    let sinh = closed_series(GfId::SinhV, 7)?;
    for n in [1, 3, 5, 7] {
        println!("sinh(x sinh z): {n}! [z^{n}] = {}", sinh.egf_coeff(n));
    }
    let q = closed_series(GfId::QGf, 6)?;
    for n in 0..=6 {
        println!(
            "(x + tan z)/(1 - x tan z): {n}! [z^{n}] = {}",
            q.egf_coeff(n)
        );
    }
    for id in GfId::ALL {
        println!("{}", verify_gf(id, MAX_ORDER)?);
    }
    Ok(())
}

fn main() -> altrun::Result<()> {
    run()
}
