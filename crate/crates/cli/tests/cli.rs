use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn koenig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koenig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze_text(text: &str) -> (Output, Option<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.gr");
    fs::write(&path, text).unwrap();
    let out = koenig(&["analyze", path.to_str().unwrap()]);
    let doc = stdout(&out).lines().next().map(|l| serde_json::from_str(l).unwrap());
    (out, doc)
}

fn fixture_text(name: &str) -> String {
    let out = koenig(&["generate", "fixture", name]);
    assert!(out.status.success());
    stdout(&out)
}

#[test]
fn analyze_nonstable_fixture() {
    let (out, doc) = analyze_text(&fixture_text("fig3_nonstable"));
    assert_eq!(out.status.code(), Some(0));
    let doc = doc.unwrap();
    assert_eq!(doc["is_ke"], true);
    assert_eq!(doc["has_pm"], true);
    assert_eq!(doc["alpha"], 4);
    assert_eq!(doc["stability"]["class"], "not_stable");
    assert!(doc["source"].as_str().unwrap().ends_with("g.gr"));
}

#[test]
fn analyze_path_on_three_vertices() {
    let (out, doc) = analyze_text("p 3 2\ne 0 1\ne 1 2\n");
    assert!(out.status.success());
    let doc = doc.unwrap();
    assert_eq!(doc["alpha"], 2);
    assert_eq!(doc["mu"], 1);
    assert_eq!(doc["is_ke"], true);
    assert_eq!(doc["has_pm"], false);
    assert_eq!(doc["core_report"]["anticore"].as_array().unwrap().len(), 1);
}

#[test]
fn analyze_one_plus_stable() {
    let (_, doc) = analyze_text(&fixture_text("fig4_g1"));
    assert_eq!(doc.unwrap()["stability"]["class"], "alpha1_plus");
}

#[test]
fn malformed_input_exits_2() {
    let (out, _) = analyze_text("p 3 1\ne 0 7\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let (out, _) = analyze_text("nonsense\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    assert_eq!(koenig(&["analyze", "/no/such/graph.gr"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.gr");
    fs::write(&path, fixture_text("fig4_g1")).unwrap();
    let out = koenig(&["analyze", "--cap", "4", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_without_refuted_statements_passes() {
    let out = koenig(&[
        "verify",
        "--seed",
        "7",
        "--count",
        "40",
        "--n",
        "2..8",
        "--skip",
        "three_way,pendant_characterization",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("violations: 0"));
}

#[test]
fn verify_reports_refuted_statements() {
    let out = koenig(&[
        "verify", "--seed", "7", "--count", "40", "--n", "2..8", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["graphs"], 280);
    let checks = doc["checks"].as_object().unwrap();
    for (name, t) in checks {
        let refuted = t["refuted"].as_bool().unwrap();
        if !refuted {
            assert_eq!(t["fail"], 0, "{name}");
        }
    }
    assert!(checks["three_way"]["fail"].as_u64().unwrap() > 0);
    assert_eq!(checks["three_way_pendant"]["fail"], 0);
}

#[test]
fn broken_check_is_caught() {
    let out = koenig(&[
        "verify",
        "--seed",
        "3",
        "--count",
        "5",
        "--n",
        "3..5",
        "--skip",
        "three_way,pendant_characterization",
        "--break-check",
        "core_criterion",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("first core_criterion failure"));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify", "--seed", "11", "--count", "10", "--n", "3..7", "--format", "json", "--kind", "any",
    ];
    assert_eq!(koenig(&args).stdout, koenig(&args).stdout);
}

#[test]
fn unknown_check_exits_2() {
    let out = koenig(&["verify", "--seed", "1", "--skip", "no_such_check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixtures_round_trip_through_generate() {
    let dir = tempfile::tempdir().unwrap();
    let out = koenig(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let names = stdout(&koenig(&["fixtures", "--list"]));
    assert!(names.lines().count() >= 8);
    for name in names.lines() {
        let stored = fs::read_to_string(dir.path().join(format!("{name}.gr"))).unwrap();
        assert_eq!(stored, fixture_text(name), "{name}");
    }
}

#[test]
fn random_tree_has_n_minus_one_edges() {
    let out = koenig(&["generate", "random-tree", "--n", "9", "--seed", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p 9 8\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 8);
    assert_eq!(
        text,
        stdout(&koenig(&["generate", "random-tree", "--n", "9", "--seed", "5"]))
    );
}

#[test]
fn random_kinds_need_a_seed() {
    assert_eq!(koenig(&["generate", "random-graph", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn bullet_on_four_cycle() {
    let out = koenig(&["generate", "bullet-kp", "--base", "c4", "--p", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p 7 8\n"));
    let (_, doc) = analyze_text(&text);
    let doc = doc.unwrap();
    assert_eq!(doc["alpha"], 3);
    assert_eq!(doc["mu"], 3);
    assert_eq!(doc["is_ke"], false);
    assert_eq!(doc["stability"]["class"], "alpha0_plus");
}

#[test]
fn bullet_on_non_bipartite_base_is_rejected() {
    let out = koenig(&["generate", "bullet-kp", "--base", "k3", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_ke_family_is_alpha_plus_and_not_ke() {
    for variant in ["0", "1"] {
        let out = koenig(&["generate", "non-ke-alpha-plus", "--n", "6", "--variant", variant]);
        assert!(out.status.success());
        let (_, doc) = analyze_text(&stdout(&out));
        let doc = doc.unwrap();
        assert_eq!(doc["is_ke"], false);
        assert_ne!(doc["stability"]["class"], "not_stable");
    }
}

#[test]
fn batch_generation_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = koenig(&[
        "generate",
        "random-connected",
        "--n",
        "6",
        "--seed",
        "100",
        "--count",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 3);
    let paths: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path().display().to_string())
        .collect();
    let mut args = vec!["analyze", "--format", "text"];
    args.extend(paths.iter().map(String::as_str));
    let out = koenig(&args);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 3);
}
