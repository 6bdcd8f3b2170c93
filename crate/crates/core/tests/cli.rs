use std::process::{Command, Output};

fn symrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symrees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn fermat_three_is_verified_by_degrees() {
    let out = symrees(&["verify-fermat", "--n", "3", "--json", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "condition-verified");
    assert_eq!(report["method"], "prop-1.2");
}

#[test]
fn small_grid_lengths_in_text_output() {
    let out = symrees(&["verify-grid", "--m", "2", "--n", "2", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lhs = 48, rhs = 48"), "{text}");
    assert!(text.contains("method: thm-2.1"));
}

#[test]
fn invalid_parameters_exit_two() {
    let out = symrees(&["verify-fermat", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    let collinear = symrees(&["verify-three-points", "--points", "1,0,0;0,1,0;1,1,0"]);
    assert_eq!(collinear.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = symrees(&["symbolic-power", "--n", "3", "--r", "2", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn identical_runs_give_identical_json() {
    let args = ["verify-grid", "--m", "2", "--n", "2", "--json", "--no-timings", "--seed", "5"];
    let a = symrees(&args);
    let b = symrees(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failed_membership_is_not_established() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"kind":"custom","points":[[1,0,0],[0,1,0],[0,0,1]],"xi1":"x*y","r1":2,"xi2":"x","r2":1}"#,
    )
    .unwrap();
    let out = symrees(&["verify-custom", "--input", path.to_str().unwrap(), "--no-timings"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("condition-not-established"));
}

#[test]
fn json_goes_to_file_and_text_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = symrees(&[
        "verify-three-points",
        "--points",
        "1,0,0;0,1,0;1/2,3,1",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: condition-verified"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["config"]["points"].as_array().unwrap().len(), 3);
    assert!(report["timings_ms"].is_object());
}

#[test]
fn symbolic_power_lists_generators() {
    let out = symrees(&["symbolic-power", "--m", "2", "--n", "2", "--r", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["r"], 1);
    assert!(report["generators"].as_array().unwrap().len() >= 2);
}
