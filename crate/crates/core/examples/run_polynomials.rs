//! Builds the first members of every polynomial family.
//!
//! ```bash
//! cargo run --example run_polynomials
//! ```

use altrun::families::{family_poly, special_number, FamilyId, SpecialId};

pub fn run() -> altrun::Result<()> {
    for id in FamilyId::ALL {
        let first = id.first_index().max(1);
        for n in first..first + 5 {
            println!("{id}_{n}(x) = {}", family_poly(id, n)?);
        }
        println!();
    }
    let euler: Vec<String> = (0..=12)
        .map(|n| special_number(SpecialId::Euler, n).map(|v| v.to_string()))
        .collect::<altrun::Result<_>>()?;
    let springer: Vec<String> = (0..=12)
        .map(|n| special_number(SpecialId::Springer, n).map(|v| v.to_string()))
        .collect::<altrun::Result<_>>()?;
    println!("E_0..E_12 = {}", euler.join(", "));
    println!("s_0..s_12 = {}", springer.join(", "));
    Ok(())
}

fn main() -> altrun::Result<()> {
    run()
}
