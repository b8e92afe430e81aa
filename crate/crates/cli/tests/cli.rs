use std::process::{Command, Output};

use binomac::identities::catalog;
use binomac::{Composition, FieldConfig, Interpolator, LaurentPoly, Variant};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binomac"))
        .args(args)
        .env_remove("CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn squeeze(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

#[test]
fn compute_g_01_symbolic() {
    let out = run(&["compute", "G", "--n", "2", "--alpha", "0,1", "--variant", "qt", "--symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x2 - t^-1");
    let out = run(&["compute", "G", "--alpha", "0,1", "--pretty"]);
    assert_eq!(stdout(&out).trim(), "x₂ − t⁻¹");
}

#[test]
fn compute_binom_is_q_plus_one() {
    let out = run(&["compute", "binom", "--alpha", "2", "--beta", "1", "--n", "1", "--variant", "qt"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(squeeze(&stdout(&out)), "q+1");
}

#[test]
fn compute_symmetric_binom_from_partitions() {
    let out = run(&["compute", "binom", "--lambda", "2,0", "--mu", "1,0", "--variant", "r"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).trim().is_empty());
}

#[test]
fn negative_index_is_usage_error() {
    let out = run(&["compute", "G", "--alpha", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "G", "--alpha", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "G", "--n", "3", "--alpha", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_json_round_trips() {
    let out = run(&["compute", "G", "--alpha", "1,2", "--variant", "r", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let parsed = LaurentPoly::from_json(&value).unwrap();
    let ip = Interpolator::new();
    let alpha = Composition::new(vec![1, 2]).unwrap();
    let direct = ip.g(&alpha, &FieldConfig::symbolic(Variant::R)).unwrap();
    assert_eq!(parsed, *direct);
}

#[test]
fn compute_specialized_collision_exits_3() {
    let out = run(&["compute", "G", "--alpha", "1,1", "--q", "-1", "--t", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("q=-1"), "{err}");
}

#[test]
fn compute_okounkov_n1() {
    let out = run(&["compute", "O", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "a/(a - 1)*x1 - 1/(a - 1)");
}

#[test]
fn check_eval_qt_n1() {
    let out = run(&["check", "eval-qt", "--n", "1", "--deg", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS eval-qt"));
}

#[test]
fn check_all_n2_deg3() {
    let out = run(&["check", "all", "--n", "2", "--deg", "3", "--seed", "42", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with("    ")).collect();
    assert_eq!(lines.len(), catalog().len());
    assert!(lines.iter().all(|l| l.starts_with("PASS ")));
    // Report order follows the catalog regardless of --jobs.
    for (line, spec) in lines.iter().zip(catalog()) {
        assert!(line.starts_with(&format!("PASS {} ", spec.id)), "{line}");
    }
}

#[test]
fn check_unknown_id_is_usage_error() {
    assert_eq!(run(&["check", "bogus"]).status.code(), Some(2));
}

#[test]
fn check_json_report_shape() {
    let out = run(&["check", "binom-qt", "--n", "2", "--deg", "2", "--seed", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["id"], "binom-qt");
    assert_eq!(v["instances"], 6);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["elapsed_ms"].is_null());
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["deg"], 2);
    assert_eq!(v["certification"]["mode"], "sampled");
}

#[test]
fn timings_fill_elapsed() {
    let out = run(&["check", "zerosp", "--n", "1", "--json", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn list_checks_variants() {
    let out = run(&["list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().count() >= 28);

    let out = run(&["list-checks", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), catalog().len());
    assert!(entries.iter().all(|e| e["id"].is_string() && e["citation"].is_string()));

    let out = run(&["list-checks", "--filter", "binom"]);
    let ids: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(
        ids,
        ["binom-qt", "binom-r", "binom-sym-r", "sym-binomial-OO", "binom-sum-support"]
    );
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("binomac-cli-cache-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let out = run(&["--cache-dir", d, "compute", "G", "--alpha", "2,1", "--variant", "r"]);
    assert_eq!(out.status.code(), Some(0));
    let first = stdout(&out);
    let stats = stdout(&run(&["--cache-dir", d, "cache", "stats"]));
    assert!(!stats.contains("entries on disk: 0"), "{stats}");
    // A second process reads the stored polynomial back.
    let again = run(&["--cache-dir", d, "compute", "G", "--alpha", "2,1", "--variant", "r"]);
    assert_eq!(stdout(&again), first);
    let cleared = stdout(&run(&["--cache-dir", d, "cache", "clear"]));
    assert!(cleared.starts_with("removed "));
    let stats = stdout(&run(&["--cache-dir", d, "cache", "stats"]));
    assert!(stats.contains("entries on disk: 0"), "{stats}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_without_directory_is_usage_error() {
    assert_eq!(run(&["cache", "stats"]).status.code(), Some(2));
}
