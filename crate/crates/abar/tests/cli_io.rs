//! End-to-end tests of the installed `abar` binary: golden outputs,
//! exit-code contract, CSV/JSON stability, and the sample → fit pipeline.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_abar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

#[test]
fn eval_moment2_golden() {
    let out = run(&["eval", "--family", "abar", "--a", "2", "--sigma", "1", "--moment2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "7.0000000000000000e0\n");
}

#[test]
fn eval_cdf_at_the_support_edge_golden() {
    let out = run(&["eval", "--family", "abar", "--a", "5", "--sigma", "1", "--cdf", "--y", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "0.0000000000000000e0\n");
}

#[test]
fn eval_mean_matches_the_library_to_the_printed_digit() {
    let out = run(&["eval", "--a", "5", "--sigma", "2", "--mean"]);
    assert_eq!(exit_code(&out), 0);
    let expected = format!("{:.16e}\n", abar::Abar::new(5.0, 2.0).unwrap().mean());
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn eval_usage_errors_exit_2() {
    // two quantities at once
    let out = run(&["eval", "--a", "2", "--sigma", "1", "--pdf", "--cdf", "--y", "1"]);
    assert_eq!(exit_code(&out), 2);
    // unknown flag
    let out = run(&["eval", "--a", "2", "--sigma", "1", "--mean", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
    // missing evaluation point
    let out = run(&["eval", "--a", "2", "--sigma", "1", "--pdf"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn eval_numerical_failures_exit_3() {
    let out = run(&["eval", "--a", "2", "--sigma", "0", "--mean"]);
    assert_eq!(exit_code(&out), 3);
    assert!(!stderr_of(&out).is_empty());

    let out = run(&["eval", "--a", "0.1", "--sigma", "10", "--mgf", "--s", "10"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr_of(&out).contains("exp("), "stderr: {}", stderr_of(&out));
}

#[test]
fn help_lists_every_subcommand_and_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    for sub in ["eval", "curve", "sample", "fit", "tcp-validate", "figures"] {
        assert!(text.contains(sub), "help missing {sub}");
    }
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

#[test]
fn curve_files_are_byte_identical_across_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.csv");
    let path_b = dir.path().join("b.csv");
    for path in [&path_a, &path_b] {
        let out = run(&[
            "curve", "--family", "abar", "--a", "5", "--sigma", "2", "--y-min", "0",
            "--y-max", "29", "--points", "300", "--quantities", "pdf,cdf,survival",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);

    // schema and column invariants
    let text = String::from_utf8(a).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with('#'));
    assert_eq!(lines[1], "y,pdf,cdf,survival");
    assert_eq!(lines.len(), 302, "comment + header + 300 rows");
    let mut prev_cdf = -1.0;
    for row in &lines[2..] {
        let cells: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cells[1] >= 0.0, "pdf must be nonnegative");
        assert!(cells[2] >= prev_cdf, "cdf must be nondecreasing");
        prev_cdf = cells[2];
    }
}

#[test]
fn curve_rejects_bad_grids_and_unwritable_paths() {
    let out = run(&[
        "curve", "--a", "5", "--sigma", "2", "--y-min", "3", "--y-max", "2",
        "--points", "10", "--out", "/tmp/never-written.csv",
    ]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&[
        "curve", "--a", "5", "--sigma", "2", "--y-min", "0", "--y-max", "2",
        "--points", "1", "--out", "/tmp/never-written.csv",
    ]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&[
        "curve", "--a", "5", "--sigma", "2", "--y-min", "0", "--y-max", "2",
        "--points", "10", "--out", "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("cannot write"));
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

#[test]
fn sample_runs_are_byte_identical_and_counted() {
    let args = ["sample", "--a", "5", "--sigma", "2", "--n", "50", "--seed", "31"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let text = stdout_of(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 52, "comment + header + 50 rows");
    assert!(lines[0].starts_with("# a=5, sigma=2, method=norm3, seed=31"));
    assert_eq!(lines[1], "value");
}

#[test]
fn sample_writes_files_and_honors_the_mean_vector() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("draws.csv");
    let out = run(&[
        "sample", "--mean-vector", "3,0,4", "--sigma", "1", "--n", "10",
        "--seed", "2", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# a=5, sigma=1"), "provenance records the norm");
    assert_eq!(text.lines().count(), 12);
}

// ---------------------------------------------------------------------------
// fit, including the sample | fit pipeline
// ---------------------------------------------------------------------------

#[test]
fn sample_pipes_into_fit_and_recovers_the_parameters() {
    // `abar sample ... | abar fit --method moments -` as two processes.
    let sample = run(&[
        "sample", "--a", "5", "--sigma", "2", "--n", "20000", "--seed", "6060",
    ]);
    assert_eq!(exit_code(&sample), 0);

    let mut fit = bin()
        .args(["fit", "--method", "moments"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    fit.stdin.take().unwrap().write_all(&sample.stdout).unwrap();
    let out = fit.wait_with_output().unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));

    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let a_hat = json["a_hat"].as_f64().unwrap();
    let sigma_hat = json["sigma_hat"].as_f64().unwrap();
    assert!((a_hat - 5.0).abs() / 5.0 <= 0.05, "a_hat = {a_hat}");
    assert!((sigma_hat - 2.0).abs() / 2.0 <= 0.05, "sigma_hat = {sigma_hat}");
    assert_eq!(json["method"], "moments");
}

#[test]
fn fit_recovers_the_maxwell_regime_from_a_file() {
    let sample = run(&[
        "sample", "--a", "0", "--sigma", "1", "--n", "20000", "--seed", "6061",
    ]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("maxwell.csv");
    std::fs::write(&path, &sample.stdout).unwrap();

    let out = run(&["fit", "--input", path.to_str().unwrap(), "--method", "mle"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let sigma_hat = json["sigma_hat"].as_f64().unwrap();
    assert!((sigma_hat - 1.0).abs() <= 0.05, "sigma_hat = {sigma_hat}");
}

#[test]
fn fit_names_the_malformed_line_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "value\n1.25\nnot-a-number\n2.5\n").unwrap();
    let out = run(&["fit", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr_of(&out);
    assert!(err.contains("line 3"), "stderr: {err}");
    assert!(err.contains("not-a-number"), "stderr: {err}");
}

#[test]
fn fit_strict_turns_boundary_solutions_into_exit_3() {
    // Ten points whose sample mean sits below the model's a=0 minimum for
    // their second moment: the moment solve has no interior root, returns
    // the boundary with converged=false.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.csv");
    let mut body = String::new();
    for _ in 0..5 {
        body.push_str("0.1\n");
    }
    for _ in 0..5 {
        body.push_str("1.41\n");
    }
    std::fs::write(&path, body).unwrap();

    let relaxed = run(&["fit", "--input", path.to_str().unwrap(), "--method", "moments"]);
    assert_eq!(exit_code(&relaxed), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&relaxed)).unwrap();
    assert_eq!(json["converged"], false);
    assert!(json["note"].as_str().unwrap().contains("boundary"));

    let strict = run(&[
        "fit", "--input", path.to_str().unwrap(), "--method", "moments", "--strict",
    ]);
    assert_eq!(exit_code(&strict), 3);
    // the JSON is still printed so the caller can inspect the diagnosis
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&strict)).unwrap();
    assert_eq!(json["converged"], false);
}

#[test]
fn fit_rejects_nonpositive_samples_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("neg.csv");
    std::fs::write(&path, "1\n2\n3\n4\n-5\n6\n7\n8\n9\n10\n").unwrap();
    let out = run(&["fit", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr_of(&out).contains("supported on y > 0"));
}

// ---------------------------------------------------------------------------
// tcp-validate
// ---------------------------------------------------------------------------

#[test]
fn tcp_validate_healthy_fixture_exits_0_with_a_json_report() {
    let out = run(&[
        "tcp-validate", "--box-half-width", "6", "--parent-intensity", "0.02",
        "--mean-daughters", "120", "--scatter-sigma", "1", "--seed", "90211",
        "--clusters", "8",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["overall_pass"], true);
    let clusters = json["clusters"].as_array().unwrap();
    assert_eq!(clusters.len(), 8);
    for c in clusters {
        assert!(c["D"].is_number());
        assert!(c["threshold"].is_number());
        assert!(c["a"].is_number());
    }
}

#[test]
fn tcp_validate_failed_validation_exits_3_but_still_reports() {
    // This seed's realization has one cluster beyond the KS threshold:
    // 7/8 < 95%, so the run fails while the report remains available.
    let out = run(&[
        "tcp-validate", "--box-half-width", "6", "--parent-intensity", "0.02",
        "--mean-daughters", "120", "--scatter-sigma", "1", "--seed", "90210",
        "--clusters", "8",
    ]);
    assert_eq!(exit_code(&out), 3);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["overall_pass"], false);
}

#[test]
fn tcp_validate_rejects_bad_configs_with_exit_3() {
    let out = run(&[
        "tcp-validate", "--box-half-width", "-1", "--parent-intensity", "0.02",
        "--mean-daughters", "120", "--scatter-sigma", "1",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(!stderr_of(&out).is_empty());
}
