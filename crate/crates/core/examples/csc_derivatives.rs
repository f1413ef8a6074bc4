//! Differentiates `csc^2` symbolically in `Q[c, t]/(t^2 = c - 1)` and
//! compares each derivative with its central-factorial expansion.
//!
//! ```bash
//! cargo run --example csc_derivatives
//! ```

use altrun::algebra::CotCscExpression;
use altrun::closed_form::csc_squared_derivative;

pub fn run() -> altrun::Result<()> {
    let mut d = CotCscExpression::csc2();
    for order in 0..=8 {
        let expected = csc_squared_derivative(order)?;
        println!(
            "D^{order} csc^2 = {d}    [matches closed form: {}]",
            d == expected
        );
        d = d.derive();
    }
    Ok(())
}

fn main() -> altrun::Result<()> {
    run()
}
