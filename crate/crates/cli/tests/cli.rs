//! End-to-end tests of the `esl` binary: exit codes, output formats,
//! determinism, and the documented figure presets.

use std::process::{Command, Output};

fn esl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Data rows of a CSV document (skips `#` metadata and the header).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn stats_reports_the_one_photon_floor() {
    let out = esl(&["stats", "--mag", "2", "--dtheta", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("# command = stats")));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 1);
    let mean_n: f64 = rows[0][3].parse().unwrap();
    assert!((mean_n - 5.0).abs() < 1e-12);
    assert_eq!(rows[0][8], "inf");
}

#[test]
fn json_round_trip_is_bit_exact() {
    let out = esl(&["stats", "--mag", "1.7", "--dtheta", "0.3", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(parsed, reparsed);

    // The payload reproduces the closed form bit-exactly.
    let rows = parsed["data"]["rows"].as_array().unwrap();
    let mean_n = rows[0][3].as_f64().unwrap();
    let mag = 1.7_f64;
    let ds: f64 = 0.3 * std::f64::consts::PI;
    let b2s2 = mag * mag * ds.sin() * ds.sin();
    let m = (1.0 + 2.0 * b2s2) / (1.0 + b2s2);
    assert_eq!(mean_n, mag * mag + m);
}

#[test]
fn identical_configs_produce_identical_bytes() {
    let a = esl(&["photon-dist", "--mag", "2", "--dtheta", "0.25", "--format", "json"]);
    let b = esl(&["photon-dist", "--mag", "2", "--dtheta", "0.25", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn wigner_grid_minimum_is_the_pure_state_bound() {
    let out = esl(&["wigner", "--beta", "1", "--dtheta", "0", "--grid", "-2,4,-3,3,21,21"]);
    assert!(out.status.success());
    let min = csv_rows(&stdout(&out))
        .iter()
        .map(|r| r[2].parse::<f64>().unwrap())
        .fold(f64::INFINITY, f64::min)
        ;
    assert!((min + 2.0 / std::f64::consts::PI).abs() < 1e-8);
}

#[test]
fn husimi_grid_is_nonnegative() {
    let out = esl(&["husimi", "--beta-re", "1", "--dtheta", "0.5", "--grid", "-2,4,-3,3,31,31"]);
    assert!(out.status.success());
    for row in csv_rows(&stdout(&out)) {
        assert!(row[2].parse::<f64>().unwrap() >= -1e-12);
    }
}

#[test]
fn empty_fock_carries_the_source_phase() {
    let out = esl(&["empty-fock", "--n", "0", "--m", "1", "--dtheta", "0.5", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = parsed["data"]["rows"].as_array().unwrap();
    // Row 1 is the |1⟩ amplitude; Δθ = π/2 makes it i.
    let re = rows[1][1].as_f64().unwrap();
    let im = rows[1][2].as_f64().unwrap();
    assert!(re.abs() < 1e-6);
    assert!((im - 1.0).abs() < 1e-6);
}

#[test]
fn build_empty_reports_the_fit_diagnostics() {
    let out = esl(&["build-empty", "--family", "coherent", "--mag", "1", "--dtheta", "0.5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# condition_met = true"));
    let g2_line = text
        .lines()
        .find(|l| l.starts_with("# g2_real = "))
        .expect("g2 in metadata");
    let g2: f64 = g2_line.trim_start_matches("# g2_real = ").parse().unwrap();
    assert!((g2 - 2.0).abs() < 1e-3, "g2 = {g2} for |α| = 1 at right angles");
}

#[test]
fn angles_are_multiples_of_pi_unless_radians() {
    let a = esl(&["stats", "--mag", "1", "--dtheta", "0.5"]);
    let b = esl(&["stats", "--mag", "1", "--dtheta", "1.5707963267948966", "--radians"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn figure_presets_cover_the_documented_set() {
    let out = esl(&["figure", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# mag = 4"));
    let header = text
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .to_string();
    assert_eq!(header, "n,p_n[dtheta=0pi],p_n[dtheta=0.25pi],p_n[dtheta=0.5pi]");
    assert_eq!(csv_rows(&text).len(), 41);

    let out = esl(&["figure", "3"]);
    assert!(stdout(&out).contains("mandel_q[dtheta=0.2pi]"));

    let out = esl(&["figure", "5"]);
    let text = stdout(&out);
    assert!(text.contains("# beta_re = 1"));
    assert!(text.contains("husimi[dtheta=0.5pi]"));
    assert_eq!(csv_rows(&text).len(), 201 * 201);

    let out = esl(&["figure", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[config]:"));
}

#[test]
fn exit_code_truncation_overflow() {
    let out = esl(&["stats", "--mag", "3", "--dtheta", "0", "--trunc", "10"]);
    // Closed-form stats never touch a state vector; the distribution does.
    assert!(out.status.success());
    let out = esl(&["phase-dist", "--mag", "3", "--dtheta", "0", "--trunc", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[truncation-overflow]:"));
}

#[test]
fn exit_code_condition_not_met() {
    // An absurdly tight limit tolerance rejects even the coherent family.
    let out = esl(&[
        "build-empty",
        "--family",
        "coherent",
        "--mag",
        "1",
        "--dtheta",
        "0",
        "--limit-tol",
        "1e-14",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr(&out).starts_with("error[necessary-condition-not-met]:"));
}

#[test]
fn exit_code_config_errors() {
    let out = esl(&["build-empty", "--family", "coherent", "--dtheta", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = esl(&["husimi", "--beta", "1", "--dtheta", "0", "--grid", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = esl(&["husimi", "--beta", "1", "--dtheta", "0", "--grid", "-2,4,-3,3,100000,101"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trunc_environment_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_esl"))
        .args(["photon-dist", "--mag", "1", "--dtheta", "0"])
        .env("ESL_DEFAULT_TRUNC", "50")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# trunc = 50"));
    assert_eq!(csv_rows(&text).len(), 51);
}

#[test]
fn write_to_file_matches_stdout() {
    let dir = std::env::temp_dir().join("esl-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stats.csv");
    let to_file = esl(&[
        "stats", "--mag", "1", "--dtheta", "0.25", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    let on_stdout = esl(&["stats", "--mag", "1", "--dtheta", "0.25"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&on_stdout));
}

#[test]
fn validate_runs_the_full_suite() {
    let out = esl(&["validate"]);
    assert!(out.status.success(), "validate failed:\n{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
    assert!(text.contains("12 of 12 checks passed"));
}
