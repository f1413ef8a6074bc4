//! Runs each crate example's entry point so they keep compiling and working.

#[allow(dead_code)]
#[path = "../examples/carlitz_defect.rs"]
mod carlitz_defect;
#[allow(dead_code)]
#[path = "../examples/central_factorial.rs"]
mod central_factorial;
#[allow(dead_code)]
#[path = "../examples/csc_derivatives.rs"]
mod csc_derivatives;
#[allow(dead_code)]
#[path = "../examples/explicit_formulas.rs"]
mod explicit_formulas;
#[allow(dead_code)]
#[path = "../examples/generating_functions.rs"]
mod generating_functions;
#[allow(dead_code)]
#[path = "../examples/permutation_oracles.rs"]
mod permutation_oracles;
#[allow(dead_code)]
#[path = "../examples/run_polynomials.rs"]
mod run_polynomials;
#[allow(dead_code)]
#[path = "../examples/verify_theorems.rs"]
mod verify_theorems;

#[test]
fn examples_run() {
    run_polynomials::run().unwrap();
    central_factorial::run().unwrap();
    permutation_oracles::run_up_to(6, 4).unwrap();
    assert!(verify_theorems::run_to(8).unwrap());
    carlitz_defect::run().unwrap();
    generating_functions::run().unwrap();
    csc_derivatives::run().unwrap();
    explicit_formulas::run().unwrap();
}
