//! End-to-end runs of the compiled binary.

use sextic_core::report;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sextic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_text(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout should be utf-8")
}

fn tmp_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn full_registry_run_passes() {
    let json = tmp_path("full.json");
    let csv = tmp_path("full.csv");
    let output = sextic(&[
        "verify-paper",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&output.stderr));

    let text = stdout_text(&output);
    let check_lines: Vec<&str> = text.lines().filter(|l| l.starts_with('[')).collect();
    assert!(check_lines.len() >= 40, "only {} check lines", check_lines.len());
    let summary = text.lines().last().unwrap();
    assert!(summary.ends_with("0 failing"), "summary was {summary:?}");

    let reports = report::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(reports.len(), check_lines.len());
    assert!(reports.iter().all(|r| r.passed()));

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("id,section,expected,computed,provenance,status"));
    // header plus one row per check
    assert_eq!(csv_text.lines().count(), reports.len() + 1);
}

#[test]
fn same_seed_runs_are_byte_identical() {
    let paths: Vec<(PathBuf, PathBuf)> = (0..2)
        .map(|i| (tmp_path(&format!("det{i}.json")), tmp_path(&format!("det{i}.csv"))))
        .collect();
    for (json, csv) in &paths {
        let output = sextic(&[
            "verify-paper",
            "--seed",
            "5",
            "--json",
            json.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(output.status.code(), Some(0));
    }
    let first_json = std::fs::read(&paths[0].0).unwrap();
    assert_eq!(first_json, std::fs::read(&paths[1].0).unwrap());
    assert_eq!(std::fs::read(&paths[0].1).unwrap(), std::fs::read(&paths[1].1).unwrap());

    // schema round-trip: parse and re-serialize without loss
    let text = String::from_utf8(first_json).unwrap();
    let reports = report::from_json(&text).unwrap();
    assert_eq!(report::to_json(&reports).unwrap(), text);
}

#[test]
fn km_filter_restricts_the_run() {
    let json = tmp_path("km.json");
    let output =
        sextic(&["verify-paper", "--filter", "km-*", "--json", json.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    for line in stdout_text(&output).lines().filter(|l| l.starts_with('[')) {
        let id = line.split_whitespace().nth(1).unwrap();
        assert!(id.starts_with("km-"), "unexpected id {id} in filtered run");
    }
    let reports = report::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(reports.len() >= 5);
    assert!(reports.iter().all(|r| r.id.starts_with("km-")));
}

#[test]
fn empty_filter_is_a_usage_error() {
    let output = sextic(&["verify-paper", "--filter", "no-such-check"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn km_prints_the_default_degrees() {
    let output = sextic(&["km"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_text(&output);
    assert!(text.contains("deg L0 = -11/6"), "got {text:?}");
    assert!(text.contains("deg L2 = 8"));
}

#[test]
fn km_accepts_negative_rationals() {
    let output = sextic(&["km", "--alpha", "-5/12", "--beta", "7"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_text(&output).contains("deg L0 = -79/72"));
}

#[test]
fn index_and_mu_match_the_documented_examples() {
    let index = sextic(&["index", "--sigma", "16", "--e", "24"]);
    assert_eq!(index.status.code(), Some(0));
    assert_eq!(stdout_text(&index).trim(), "index = 52");

    let mu = sextic(&["mu", "--a", "24", "--b", "11"]);
    assert_eq!(mu.status.code(), Some(0));
    assert_eq!(stdout_text(&mu).trim(), "mu = 124");
}

#[test]
fn hilbert_range_ends_with_the_cubic_fit() {
    let output = sextic(&["hilbert", "--p", "1..4"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_text(&output);
    for line in ["H(1) = 11", "H(2) = 46", "H(3) = 129", "H(4) = 284"] {
        assert!(text.contains(line), "missing {line:?} in {text:?}");
    }
    assert!(text.trim_end().ends_with("odd cubic fit: (4, 7)"));
}

#[test]
fn smooth_search_stays_empty_at_a_smooth_point() {
    let output = sextic(&[
        "smooth", "--A", "0", "--B", "-5/4", "--attempts", "60", "--seed", "7", "--tol", "1e-9",
    ]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let text = stdout_text(&output);
    assert!(text.contains("discriminant (+,+) = 0"));
    assert!(text.contains("no singular points found in 60 attempts"));
}

#[test]
fn smooth_search_finds_the_singular_locus() {
    let output = sextic(&["smooth", "--A", "1", "--B", "1", "--attempts", "120", "--seed", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_text(&output);
    assert!(text.contains("candidate singular points"), "got {text:?}");
}

#[test]
fn invariants_reports_orders_and_dimensions() {
    let output = sextic(&["invariants"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_text(&output);
    assert!(text.contains("order 72"));
    assert!(text.contains("invariants in degree-6 forms: dimension 4"));
    assert!(text.contains("invariants in bidegree (6,6): dimension 5"));
}

#[test]
fn bad_usage_exits_2() {
    assert_eq!(sextic(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(sextic(&["km", "--alpha", "one"]).status.code(), Some(2));
}
