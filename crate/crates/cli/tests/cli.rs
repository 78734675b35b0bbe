//! End-to-end tests of the `constacyclic` binary: output shapes, exit
//! codes, and file round-trips.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_constacyclic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn factor_over_f2_gives_the_three_known_factors() {
    let out = run(&["factor", "--p", "2", "--poly", "a^7-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out), "a^7 + 1 = (a + 1)(a^3 + a + 1)(a^3 + a^2 + 1)\n");
}

#[test]
fn factor_over_f5_splits_a_difference_of_squares() {
    let out = run(&["factor", "--p", "5", "--poly", "a^2-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out), "a^2 + 4 = (a + 1)(a + 4)\n");
}

#[test]
fn factor_rejects_composite_modulus_with_exit_2() {
    let out = run(&["factor", "--p", "9", "--poly", "a^2-1"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("not prime"), "stderr: {}", stderr(&out));
}

#[test]
fn factor_rejects_malformed_polynomial_with_exit_1() {
    for bad in ["b+1", "a^", "a a", ""] {
        let out = run(&["factor", "--p", "5", "--poly", bad]);
        assert_exit(&out, 1);
    }
}

#[test]
fn ring_info_reports_all_identities_at_k2() {
    let out = run(&["ring-info", "--p", "5", "--k", "2"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("lambda  = 1 + 3u^2"), "{text}");
    assert!(text.contains("sigma_1 = 1 + 4u^2"), "{text}");
    assert!(!text.contains("FAILS"), "{text}");
}

#[test]
fn ring_info_flags_broken_idempotency_at_k3() {
    let out = run(&["ring-info", "--p", "5", "--k", "3"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("sigma_2^2"), "{text}");
    assert!(text.contains("FAILS"), "{text}");
    // the square of sigma_1 and every lambda product still hold at k = 3
    assert!(text.contains("sigma_1^2 = 1 + 4u^3   ok"), "{text}");
    assert!(text.contains("(expect -sigma_2)   ok"), "{text}");
}

#[test]
fn ring_info_rejects_even_modulus_and_small_k_with_exit_2() {
    assert_exit(&run(&["ring-info", "--p", "2", "--k", "2"]), 2);
    assert_exit(&run(&["ring-info", "--p", "5", "--k", "1"]), 2);
}

#[test]
fn code_pipeline_build_check_dual_gray_distance() {
    let dir = tempfile::tempdir().expect("tempdir");
    let code_path = dir.path().join("code.json");
    let dual_path = dir.path().join("dual.json");
    let code_file = code_path.to_str().unwrap();
    let dual_file = dual_path.to_str().unwrap();

    let out = run(&[
        "code", "build", "--p", "3", "--k", "2", "--m", "2", "--h1", "a-1", "--h2", "a^2+1",
        "--h3", "1", "--out", code_file,
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("|L| = 27 = 3^3"), "{text}");
    assert!(text.contains("h(a) = "), "{text}");

    let out = run(&["code", "check", "--input", code_file]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("gamma-invariant: true"), "{}", stdout(&out));

    let out = run(&["code", "dual", "--input", code_file, "--out", dual_file]);
    assert_exit(&out, 0);
    // |L| * |L-dual| = |R^m| = 3^6; the dual is gamma-invariant again
    let dual_text = std::fs::read_to_string(&dual_path).expect("dual file");
    let parsed: serde_json::Value = serde_json::from_str(&dual_text).expect("dual json");
    assert_eq!(parsed["unit"], "lambda");
    let out = run(&["code", "check", "--input", dual_file]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("gamma-invariant: true"), "{}", stdout(&out));

    let out = run(&["code", "gray", "--input", code_file]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("length 6, dim 3, |image| = 27"), "{text}");
    assert!(text.contains("generator matrix:"), "{text}");

    let out = run(&["code", "distance", "--input", code_file]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out), "minimum Hamming distance = 1\n");
}

#[test]
fn code_build_rejects_non_divisor_with_exit_2() {
    let out = run(&[
        "code", "build", "--p", "5", "--k", "2", "--m", "2", "--h1", "a+2", "--h2", "a^2+1",
        "--h3", "1",
    ]);
    assert_exit(&out, 2);
    assert!(
        stderr(&out).contains("does not divide a^2 - 1 over F_5"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn code_build_rejects_k_other_than_2_with_exit_2() {
    let out = run(&[
        "code", "build", "--p", "5", "--k", "3", "--m", "2", "--h1", "a-1", "--h2", "a^2+1",
        "--h3", "1",
    ]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("k = 2"), "stderr: {}", stderr(&out));
}

#[test]
fn code_distance_respects_the_cap_with_exit_3() {
    let dir = tempfile::tempdir().expect("tempdir");
    let code_path = dir.path().join("code.json");
    let code_file = code_path.to_str().unwrap();
    let out = run(&[
        "code", "build", "--p", "3", "--k", "2", "--m", "2", "--h1", "1", "--h2", "1", "--h3",
        "1", "--out", code_file,
    ]);
    assert_exit(&out, 0);
    let out = run(&["code", "distance", "--input", code_file, "--cap", "10"]);
    assert_exit(&out, 3);
    assert!(stderr(&out).contains("cap"), "stderr: {}", stderr(&out));
}

#[test]
fn code_subcommands_report_missing_files_with_exit_4() {
    for sub in ["dual", "gray", "distance", "check"] {
        let out = run(&["code", sub, "--input", "/nonexistent/code.json"]);
        assert_exit(&out, 4);
    }
}

#[test]
fn code_subcommands_reject_corrupt_files_with_exit_4() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").expect("write");
    let out = run(&["code", "check", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 4);
}

#[test]
fn code_files_with_impossible_parameters_exit_2() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("composite.json");
    std::fs::write(
        &path,
        r#"{"p": 9, "k": 2, "m": 1, "unit": "lambda", "generators": []}"#,
    )
    .expect("write");
    let out = run(&["code", "check", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("not prime"), "stderr: {}", stderr(&out));
}

#[test]
fn dual_of_a_plain_fp_code_file_stays_in_the_fp_layout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("fp.json");
    // the repetition code {000, 111, 222} over F_3, cyclic
    std::fs::write(
        &path,
        r#"{"p": 3, "k": 0, "m": 3, "unit": "cyclic", "generators": [[[1],[1],[1]]]}"#,
    )
    .expect("write");
    let out = run(&["code", "dual", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(parsed["k"], 0);
    assert_eq!(parsed["generators"].as_array().unwrap().len(), 2);
    // the Gray map does not apply to the plain layout
    let out = run(&["code", "gray", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 2);
}

#[test]
fn theorems_single_claim_json_row_records_the_shift_counterexample() {
    let out = run(&[
        "theorems", "run", "--id", "T2.1", "--p", "5", "--k", "2", "--m", "1", "--format",
        "json",
    ]);
    assert_exit(&out, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let checks = parsed["checks"].as_array().expect("checks");
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["claim"], "T2.1");
    assert_eq!(checks[0]["status"], "fails");
    let ce = &checks[0]["counterexample"];
    assert_eq!(ce["vector"], serde_json::json!([[0, 1, 0]]));
    assert_eq!(ce["lhs"], serde_json::json!([0, 4, 0]));
    assert_eq!(ce["rhs"], serde_json::json!([0, 0, 1]));
    assert_eq!(parsed["summary"]["fails"], 1);
}

#[test]
fn theorems_unknown_claim_id_is_a_usage_error() {
    let out = run(&["theorems", "run", "--id", "T9.9"]);
    assert_exit(&out, 1);
    assert!(stderr(&out).contains("known ids"), "stderr: {}", stderr(&out));
}

#[test]
fn theorems_empty_grid_prints_an_empty_table() {
    let out = run(&["theorems", "run", "--p", ""]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("0 rows: 0 holds, 0 fails, 0 not-applicable"), "{text}");
}

#[test]
fn theorems_rejects_invalid_grid_entries_with_exit_2() {
    assert_exit(&run(&["theorems", "run", "--p", "4"]), 2);
    assert_exit(&run(&["theorems", "run", "--p", "2"]), 2);
    assert_exit(&run(&["theorems", "run", "--k", "0"]), 2);
    assert_exit(&run(&["theorems", "run", "--m", "0"]), 2);
    // a malformed list is a usage error, not a math error
    assert_exit(&run(&["theorems", "run", "--p", "3;5"]), 1);
}

#[test]
fn theorems_report_written_to_a_file_equals_stdout_output() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let args = [
        "theorems", "run", "--id", "T2.5", "--p", "3", "--k", "2", "--m", "1,2", "--format",
        "json",
    ];
    let direct = run(&args);
    assert_exit(&direct, 0);
    let mut file_args: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    file_args.extend(["--out", path_str]);
    let via_file = run(&file_args);
    assert_exit(&via_file, 0);
    let written = std::fs::read_to_string(&path).expect("report file");
    assert_eq!(written, stdout(&direct));
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    assert_exit(&run(&[]), 1);
    assert_exit(&run(&["code"]), 1);
    assert_exit(&run(&["factor", "--p", "5"]), 1);
    assert_exit(&run(&["frobnicate"]), 1);
    assert_exit(&run(&["--help"]), 0);
    assert_exit(&run(&["code", "build", "--help"]), 0);
    assert_exit(&run(&["--version"]), 0);
}

#[test]
fn built_code_file_round_trips_through_the_library_parser() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("code.json");
    let out = run(&[
        "code", "build", "--p", "3", "--k", "2", "--m", "3, --h1", "--h1", "a-1", "--h2",
        "a+1", "--h3", "a^2-a+1", "--out", path.to_str().unwrap(),
    ]);
    // the stray token "3, --h1" must not parse as a number
    assert_exit(&out, 1);
    let out = run(&[
        "code", "build", "--p", "3", "--k", "2", "--m", "3", "--h1", "a-1", "--h2", "a+1",
        "--h3", "a^2-a+1", "--out", path.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(&path).expect("file");
    let file = constacyclic::CodeFile::from_json(&text).expect("round-trip");
    let code = file.as_r_code().expect("r-code");
    assert_eq!(code.length(), 3);
    let h = constacyclic::CodeFile::from_json(&text).expect("parse twice is stable");
    assert_eq!(h.to_json(), file.to_json());
}

#[test]
fn distance_of_a_known_fp_code_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("rep.json");
    std::fs::write(
        &path,
        r#"{"p": 3, "k": 0, "m": 3, "unit": "cyclic", "generators": [[[1],[1],[1]]]}"#,
    )
    .expect("write");
    let out = run(&["code", "distance", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out), "minimum Hamming distance = 3\n");
}

#[test]
fn distance_of_the_zero_code_is_a_math_error() {
    // the zero code has no nonzero word: exit 2, not a crash
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("zero.json");
    std::fs::write(
        &path,
        r#"{"p": 3, "k": 2, "m": 2, "unit": "lambda", "generators": []}"#,
    )
    .expect("write");
    let out = run(&["code", "distance", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("zero code"), "stderr: {}", stderr(&out));
}
