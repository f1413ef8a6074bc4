//! Evaluates the explicit double sums for `R(n,k)` and the Stirling-number
//! formula for the coefficients of `Q_n`.
//!
//! ```bash
//! cargo run --example explicit_formulas
//! ```

use altrun::identities::{ma_p, ma_r, stanley_r};

pub fn run() -> altrun::Result<()> {
    for n in 2..=7 {
        let stanley: Vec<String> = (1..n)
            .map(|k| stanley_r(n, k).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        let ma: Vec<String> = (1..n)
            .map(|s| ma_r(n, s).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        println!(
            "R({n},1..{}) double sum: [{}]  tangent expansion: [{}]",
            n - 1,
            stanley.join(", "),
            ma.join(", ")
        );
    }
    for n in 1..=6usize {
        let coeffs: Vec<String> = (0..=n as i64 + 1)
            .rev()
            .step_by(2)
            .map(|m| ma_p(n, m).map(|v| format!("{v}x^{m}")))
            .collect::<Result<_, _>>()?;
        println!("Q_{n}(x) = {}", coeffs.join(" + "));
    }
    Ok(())
}

fn main() -> altrun::Result<()> {
    run()
}
