use std::process::{Command, Output};

fn altrun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altrun"))
        .args(args)
        .output()
        .expect("spawn altrun")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poly_pretty_and_json() {
    let out = altrun(&["poly", "RHAT", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "RHAT_3(x) = x + 12x^2 + 11x^3");

    let out = altrun(&["poly", "q", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["0", "2", "0", "2"]));
}

#[test]
fn out_of_range_requests_exit_2() {
    for args in [
        &["verify", "thm1_odd", "--max-n", "1"][..],
        &["oracle", "alt_runs", "--n", "11"],
        &["oracle", "signed_runs_up", "--n", "8"],
        &["poly", "R", "--n", "0"],
        &["verify", "tan_sec", "--max-n", "25"],
        &["triangle", "X"],
        &["verify", "all", "--format", "bfile"],
    ] {
        let out = altrun(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_prints_one_line_per_index() {
    let out = altrun(&["verify", "thm2", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "thm2 n=1 PASS",
            "thm2 n=2 PASS",
            "thm2 n=3 PASS",
            "thm2 n=4 PASS"
        ]
    );
}

#[test]
fn verify_all_is_deterministic() {
    let a = altrun(&["verify", "all", "--max-n", "6", "--format", "csv"]);
    let b = altrun(&["verify", "all", "--max-n", "6", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.ends_with(",PASS")));
}
