//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn kacmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kacmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn atyp_reproduces_the_gl45_example() {
    let out = kacmod(&["--alg", "4,5", "atyp", "--mu", "2,1,0,0|0,-2,-2,-2,-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "atypicality matrix:",
        "5  2  1  0 -1",
        "3  0 -1 -2 -3",
        "1 -2 -3 -4 -5",
        "0 -3 -4 -5 -6",
        "gamma chain: beta(4,1) < beta(2,2) < beta(1,4)",
        "Delta(gamma_3) = { beta(1,4), beta(1,5) }",
        "nabla(gamma_1) = { beta(4,1), beta(3,1) }",
        "k = (2, 5, 2)",
        "connected pairs: (gamma_2, gamma_3)",
        "mu_0 = 0,0,-4,-4|2,1,0,0,0",
    ] {
        assert!(text.contains(line), "missing `{line}` in:\n{text}");
    }
}

#[test]
fn atyp_marks_typical_weights() {
    let out = kacmod(&["--alg", "2,2", "atyp", "--mu", "3,1|0,-2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("typical, r=0"));
}

#[test]
fn malformed_weight_is_a_usage_error() {
    let out = kacmod(&["--alg", "2,2", "atyp", "--mu", "3,1,0|0,-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("arity"));

    let out = kacmod(&["--alg", "2,2", "atyp", "--mu", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kacmod(&["atyp", "--mu", "0|0"]);
    assert_eq!(out.status.code(), Some(2), "--alg is required");
}

#[test]
fn column_prints_the_gl45_theta_table() {
    let out = kacmod(&[
        "--alg",
        "4,5",
        "column",
        "--mu",
        "2,1,0,0|0,-2,-2,-2,-2",
        "--q",
    ]);
    assert!(out.status.success());
    let expected = "\
mu: 2,1,0,0|0,-2,-2,-2,-2 (r = 3)
theta:   mu_theta:                 lambda_theta:             coeff:
(0,0,0)  (2,1,0,0|0,-2,-2,-2,-2)   (2,1,0,0|0,-2,-2,-2,-2)   1
(1,0,0)  (2,1,0,2|-2,-2,-2,-2,-2)  (2,1,1,1|-2,-2,-2,-2,-2)  -q
(0,1,0)  (2,6,0,0|0,-7,-2,-2,-2)   (5,3,0,0|0,-3,-3,-3,-4)   -q
(0,0,1)  (4,1,0,0|0,-2,-2,-4,-2)   (4,1,0,0|0,-2,-2,-3,-3)   -q
(1,1,0)  (2,6,0,2|-2,-7,-2,-2,-2)  (5,3,1,1|-2,-3,-3,-3,-4)  q^2
(1,0,1)  (4,1,0,2|-2,-2,-2,-4,-2)  (4,1,1,1|-2,-2,-2,-3,-3)  q^2
(0,1,1)  (4,6,0,0|0,-7,-2,-4,-2)   (5,5,0,0|0,-3,-4,-4,-4)   q^2
(1,1,1)  (4,6,0,2|-2,-7,-2,-4,-2)  (5,5,1,1|-2,-3,-4,-4,-4)  -q^3
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn gl11_column_has_two_rows() {
    let out = kacmod(&["--alg", "1,1", "column", "--mu", "2|-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2|-2)"));
    assert!(text.contains("(3|-3)"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = [
        "--alg",
        "4,5",
        "--format",
        "json",
        "column",
        "--mu",
        "2,1,0,0|0,-2,-2,-2,-2",
        "--q",
    ];
    let first = kacmod(&args);
    let second = kacmod(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 8);
    assert_eq!(
        json["entries"][7]["coeff"],
        serde_json::json!([0, 0, 0, -1])
    );
}

#[test]
fn row_matches_the_equal_block_case() {
    let out = kacmod(&["--alg", "2,2", "row", "--lambda", "3,3|-3,-3"]);
    assert!(out.status.success());
    let expected = "\
lambda: 3,3|-3,-3
mu:          coeff:
(3,3|-3,-3)  1
(3,2|-2,-3)  -q
(1,1|-1,-1)  q^2
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn matrix_cache_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache_dir = dir.path().to_str().unwrap();
    let args = [
        "--alg", "1,1", "--format", "json", "--cache", cache_dir, "matrix", "--lo", "-2|2", "--hi",
        "2|-2",
    ];
    let cold = kacmod(&args);
    assert!(cold.status.success(), "{}", stderr(&cold));
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one cache file written");

    let warm = kacmod(&args);
    assert!(warm.status.success());
    assert_eq!(cold.stdout, warm.stdout, "warm run matches cold run");
    assert!(stderr(&warm).is_empty(), "clean load: {}", stderr(&warm));

    // tampered entry: valid JSON that fails validation is ignored with a
    // warning and the result is recomputed
    let path = entries[0].as_ref().unwrap().path();
    std::fs::write(
        &path,
        r#"{"window":[{"eps":[9],"delta":[-9]}],"entries":[]}"#,
    )
    .unwrap();
    let tampered = kacmod(&args);
    assert!(tampered.status.success());
    assert_eq!(cold.stdout, tampered.stdout);
    assert!(
        stderr(&tampered).contains("warning"),
        "expected a warning, got: {}",
        stderr(&tampered)
    );

    // unreadable entry
    std::fs::write(&path, b"not json").unwrap();
    let corrupt = kacmod(&args);
    assert!(corrupt.status.success());
    assert_eq!(cold.stdout, corrupt.stdout);
    assert!(stderr(&corrupt).contains("warning"));
}

fn cache_key_differs(path: &Path) -> usize {
    std::fs::read_dir(path).unwrap().count()
}

#[test]
fn matrix_cache_version_and_window_are_part_of_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let cache_dir = dir.path().to_str().unwrap();
    let base = ["--alg", "1,1", "--cache", cache_dir, "matrix"];
    let first = kacmod(&[&base[..], &["--lo", "-1|1", "--hi", "1|-1"]].concat());
    assert!(first.status.success());
    let second = kacmod(&[&base[..], &["--lo", "-2|2", "--hi", "1|-1"]].concat());
    assert!(second.status.success());
    assert_eq!(
        cache_key_differs(dir.path()),
        2,
        "different windows use different keys"
    );
}

#[test]
fn matrix_invert_specialize_pipeline() {
    let out = kacmod(&[
        "--alg",
        "2,2",
        "--format",
        "json",
        "matrix",
        "--lo",
        "-1,-1|1,1",
        "--hi",
        "0,0|0,0",
        "--invert",
        "--specialize",
        "q=-1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["value"].is_i64()));
}

#[test]
fn char_and_decompose_commands() {
    let out = kacmod(&[
        "--alg", "1,1", "--format", "json", "char", "--kind", "simple", "--weight", "3|-3",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["exact"], serde_json::json!(true));
    assert_eq!(json["terms"].as_array().unwrap().len(), 1);

    let out = kacmod(&[
        "--alg",
        "2,2",
        "decompose",
        "--kind",
        "kac",
        "--weight",
        "1,0|0,-1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("g0 constituents"));

    // non-dominant input is a validation error
    let out = kacmod(&[
        "--alg", "2,2", "char", "--kind", "kac", "--weight", "0,1|0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_injected_faults() {
    let out = kacmod(&["--format", "json", "verify"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["all_pass"], serde_json::json!(true));
    assert_eq!(json["falsification_candidates"], serde_json::json!(false));
    // ten criterion checks plus two six-check window identity suites
    assert_eq!(json["report"]["checks"].as_array().unwrap().len(), 22);

    // verify output in JSON mode is deterministic across runs
    let again = kacmod(&["--format", "json", "verify"]);
    assert_eq!(out.stdout, again.stdout);

    let fault = kacmod(&["verify", "--inject-fault"]);
    assert_eq!(fault.status.code(), Some(1));
    assert!(stdout(&fault).contains("FAIL"));
    assert!(stdout(&fault).contains("identity suites"));
}
