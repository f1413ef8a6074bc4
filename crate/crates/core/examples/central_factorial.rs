//! Central factorial triangles by recurrence and by explicit sums, checked
//! against exhaustive set-partition counts.
//!
//! ```bash
//! cargo run --example central_factorial
//! ```

use altrun::triangles::{
    cf_partition_oracle, u_basis_identity, u_number, v_number, CfKind, Method, Triangle,
    TriangleKind, U_ORACLE_BOUND, V_ORACLE_BOUND,
};

pub fn run() -> altrun::Result<()> {
    for kind in [TriangleKind::U, TriangleKind::V] {
        let t = Triangle::build(kind, 7)?;
        println!("{} triangle:", t.name);
        for (n, row) in t.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  n={n}: {}", cells.join(" "));
        }
    }

    let mut agree = true;
    for n in 1..=25 {
        for k in 0..=n {
            agree &= u_number(n, k, Method::Recurrence)? == u_number(n, k, Method::Explicit)?;
            agree &= v_number(n, k, Method::Recurrence)? == v_number(n, k, Method::Explicit)?;
        }
    }
    println!("recurrence and explicit sums agree up to n=25: {agree}");

    for n in 1..=U_ORACLE_BOUND {
        let counted = cf_partition_oracle(CfKind::U, n)?;
        let row: Vec<_> = (1..=n)
            .map(|k| u_number(n, k, Method::Recurrence))
            .collect::<Result<_, _>>()?;
        println!(
            "U row {n}: partitions {:?} recurrence match {}",
            fmt(&counted),
            counted == row
        );
    }
    for n in 0..=V_ORACLE_BOUND {
        let counted = cf_partition_oracle(CfKind::V, n)?;
        let row: Vec<_> = (0..=n)
            .map(|k| v_number(n, k, Method::Recurrence))
            .collect::<Result<_, _>>()?;
        println!(
            "V row {n}: partitions {:?} recurrence match {}",
            fmt(&counted),
            counted == row
        );
    }
    println!("{}", u_basis_identity(12)?);
    Ok(())
}

fn fmt(v: &[altrun::algebra::Integer]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn main() -> altrun::Result<()> {
    run()
}
