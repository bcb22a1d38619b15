//! Golden tests for the command line interface.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn schubert_latex_golden() {
    let (stdout, _, code) = run(&["schubert", "--type", "A", "--w", "3,2,1", "--format", "latex"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(y_1-z_1)(y_1-z_2)(y_2-z_1)\n");
}

#[test]
fn theta_formal_golden() {
    let (stdout, _, code) = run(&["theta", "--k", "1", "--shape", "3,1,1", "--formal"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "c3*c1^2 - c4*c1 - c3*c2\n");
}

#[test]
fn eta_formal_golden() {
    let (stdout, _, code) =
        run(&["eta", "--k", "1", "--shape", "3,1,1", "--tag", "2", "--formal"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "t'1*t3*t1 - t3*t2 + t'1^2*t3 - 2*t'1*t4 + t5\n");
}

#[test]
fn verify_suite_exits_zero() {
    let (stdout, _, code) = run(&["verify", "--suite", "bijection", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
}

#[test]
fn validation_error_exits_two() {
    let (_, stderr, code) = run(&["schubert", "--type", "C", "--w", "1,1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("validation"));
    let (_, _, code) = run(&["schubert", "--badflag"]);
    assert_eq!(code, 2);
}

#[test]
fn deterministic_output() {
    let args = ["locus", "--type", "C", "--w", "3,-1,-2", "--n", "3", "--a", "1,2", "--b", "0,1", "--format", "json"];
    let (a, _, _) = run(&args);
    let (b, _, _) = run(&args);
    assert_eq!(a, b);
    assert!(a.contains("locus-v1"));
}

#[test]
fn json_output_parses_back() {
    let (stdout, _, code) =
        run(&["schubert", "--type", "C", "--w", "-1,2", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let poly = schubert_core::mpoly::MPoly::from_json(&value).unwrap();
    assert_eq!(poly.to_string(), "2*x1");
    // Tree JSON parses as JSON and carries the expected root.
    let (stdout, _, code) = run(&[
        "tree", "--type", "C", "--w", "3,-1,2,6,4,5", "--k", "1", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["node"], "3,-1,2,6,4,5");
}

#[test]
fn out_file_written() {
    let dir = std::env::temp_dir().join("schubert-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let path_str = path.to_str().unwrap();
    let (_, _, code) = run(&["theta", "--k", "1", "--shape", "3,1,1", "--formal", "--out", path_str]);
    assert_eq!(code, 0);
    let contents = std::fs::read_to_string(&path).unwrap();
    assert_eq!(contents, "c3*c1^2 - c4*c1 - c3*c2\n");
}
