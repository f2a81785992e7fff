use std::process::{Command, Output};

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn hilbert_tables() {
    let o = subres(&["hilbert", "--n", "2", "--degrees", "3,2", "--t", "0..4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,2,2,1,0");
    assert_eq!(stdout(&subres(&["hilbert", "--n", "3", "--degrees", "2,2,2", "--t", "0..3"])).trim(), "1,3,3,1");
    assert_eq!(stdout(&subres(&["hilbert", "--n", "4", "--degrees", "3,3,2,2", "--t", "0..0"])).trim(), "1");
}

#[test]
fn delta_outputs_and_exit_codes() {
    let o = subres(&["delta", "--n", "2", "--degrees", "2,2", "--nu", "2", "--s", "x1*x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("c1_0_2*c2_2_0 - c1_2_0*c2_0_2\n"));

    let o = subres(&["delta", "--n", "2", "--degrees", "4,2", "--nu", "3", "--s", "x1*x2^2,x2^3", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], "subres-report/1");
    assert_eq!(doc["body"]["text"], "c2_2_0^2");

    let o = subres(&["delta", "--n", "2", "--degrees", "4,2", "--nu", "3", "--s", "x2^3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("H(nu) = 2"));

    let o = subres(&["delta", "--n", "3", "--degrees", "3,3,1", "--nu", "2", "--s", "x1*x3, x2*x3, x3^2"]);
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(subres(&["delta", "--n", "2", "--degrees", "2,2", "--nu", "2", "--s", "x1*x9"]).status.code(), Some(2));
    assert_eq!(subres(&["hilbert", "--n", "2", "--degrees", "3,0", "--t", "0..2"]).status.code(), Some(2));
}

#[test]
fn verify_needs_a_seed_and_reports_bound_cases() {
    assert_eq!(subres(&["verify", "--degrees", "2,2"]).status.code(), Some(2));
    let o = subres(&["--seed", "5", "verify", "--degrees", "2,2;4,2", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("S={x1*x2^2, x2^3} -> reducible"));
    assert!(text.ends_with("verify: passed\n"));
    assert_eq!(subres(&["--seed", "5", "verify", "--max-degree", "5"]).status.code(), Some(2));
}

#[test]
fn structured_bodies_are_reproducible() {
    let run = |jobs: &str| {
        let o = subres(&["--seed", "9", "--jobs", jobs, "--format", "structured", "verify", "--degrees", "3,2;2,2,2"]);
        assert_eq!(o.status.code(), Some(0));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        doc["body"].clone()
    };
    let serial = run("1");
    assert_eq!(serial, run("1"));
    assert_eq!(serial, run("3"));
}

#[test]
fn residual_report() {
    let o = subres(&["--seed", "1", "residual", "--n", "2", "--degrees", "3,2", "--nu", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("residual degrees [1, 2] (expected [1, 2])"));
    assert!(text.contains("S-independent true"));
    assert!(text.contains("Sylvester resultant of the multipliers: true"));
    assert_eq!(subres(&["residual", "--n", "2", "--degrees", "3,2", "--nu", "3"]).status.code(), Some(2));
}

#[test]
fn unwritable_output_fails() {
    let o = subres(&["--out", "/nonexistent/dir/report.txt", "hilbert", "--n", "2", "--degrees", "2,2", "--t", "0..2"]);
    assert_eq!(o.status.code(), Some(1));
}
