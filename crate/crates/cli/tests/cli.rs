use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn iasi(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_iasi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = iasi(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("valid json")
}

fn code(args: &[&str], stdin: &[u8]) -> i32 {
    iasi(args, stdin).status.code().unwrap()
}

#[test]
fn cycle_sieve_pipeline() {
    let c12 = ok(&["gen", "cycle", "--n", "12"], b"");
    let sieve = ok(&["sieve", "--k", "3"], &c12);
    let g = json(&sieve);
    assert_eq!(g["n"], 12);
    assert_eq!(g["edges"].as_array().unwrap().len(), 24);
    let r = json(&ok(&["sparing", "--oracle", "sets"], &sieve));
    assert_eq!(r["phi"], 0);
    assert_eq!(r["status"]["kind"], "optimal");
    assert_eq!(r["oracle"]["agrees"], true);
}

#[test]
fn odd_cycle_has_one_mono_edge() {
    let c5 = ok(&["gen", "cycle", "--n", "5"], b"");
    let raw = String::from_utf8(ok(&["sparing"], &c5)).unwrap();
    assert_eq!(json(raw.as_bytes())["phi"], 1);
    let at = |key: &str| raw.find(&format!("\"{key}\":")).unwrap();
    let order = ["phi", "optimal_set", "witness", "status", "stats"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{raw}");
}

#[test]
fn labeling_oracle_agrees_on_small_graph() {
    let k4 = ok(&["gen", "complete", "--n", "4"], b"");
    let r = json(&ok(
        &["sparing", "--oracle", "labelings", "--universe", "12"],
        &k4,
    ));
    assert_eq!(r["phi"], 3);
    assert_eq!(r["oracle"]["phi"], 3);
}

#[test]
fn power_two_matches_two_sieve_on_a_path() {
    let p = ok(&["gen", "path", "--length", "5"], b"");
    let square = json(&ok(&["power", "--r", "2"], &p));
    let sieve = json(&ok(&["sieve", "--k", "2"], &p));
    assert_eq!(square, sieve);
}

#[test]
fn label_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c6.json");
    let labels = dir.path().join("labels.json");
    fs::write(&graph, ok(&["gen", "cycle", "--n", "6"], b"")).unwrap();
    let g = graph.to_str().unwrap();
    ok(
        &[
            "label",
            "-i",
            g,
            "--set",
            "0,2",
            "-o",
            labels.to_str().unwrap(),
        ],
        b"",
    );
    let v = json(&ok(
        &["label", "-i", g, "--validate", labels.to_str().unwrap()],
        b"",
    ));
    assert_eq!(v["is_weak_iasi"], true);
    assert_eq!(v["mono_indexed_edges"], 2);

    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"vertex_labels":{"0":[1,2],"1":[1,3],"2":[1],"3":[2],"4":[3],"5":[4]}}"#,
    )
    .unwrap();
    let v = json(&ok(
        &["label", "-i", g, "--validate", bad.to_str().unwrap()],
        b"",
    ));
    assert_eq!(v["is_weak_iasi"], false);
}

#[test]
fn census_csv_counts_geodesics() {
    let dir = tempfile::tempdir().unwrap();
    let census = dir.path().join("census.csv");
    let c8 = ok(&["gen", "cycle", "--n", "8"], b"");
    ok(
        &["sieve", "--k", "4", "--census", census.to_str().unwrap()],
        &c8,
    );
    let text = fs::read_to_string(census).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u,v,geodesic_count"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.ends_with(",2")));
}

#[test]
fn export_dot_marks_mono_edges() {
    let c5 = ok(&["gen", "cycle", "--n", "5"], b"");
    let dot = String::from_utf8(ok(&["export", "--dot"], &c5)).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("style=dashed").count(), 1);
    let plain = String::from_utf8(ok(&["export", "--dot", "--plain"], &c5)).unwrap();
    assert!(!plain.contains("dashed"));
}

#[test]
fn formula_values() {
    let r = json(&ok(&["formula", "--family", "complete", "--n", "5"], b""));
    assert_eq!(r["candidates"][0]["value"], 6);
    assert_eq!(r["status"], "PROVEN-ELEMENTARY");
    let r = json(&ok(
        &[
            "formula",
            "--family",
            "cycle-sieve",
            "--n",
            "12",
            "--k",
            "3",
        ],
        b"",
    ));
    assert_eq!(r["candidates"][0]["value"], 0);
}

fn sweep_once(dir: &Path, plan: &Path) -> (i32, String) {
    let out = dir.join("out");
    let status = code(
        &[
            "sweep",
            "--plan",
            plan.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ],
        b"",
    );
    let csv = fs::read_to_string(out.join("report.csv")).unwrap();
    let report = json(&fs::read(out.join("report.json")).unwrap());
    assert!(report.is_object() || report.is_array());
    (status, csv)
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    fs::write(
        &plan,
        r#"{"seed":3,"budget":100000000,"grids":[
            {"family":"path-sieve","k":[4],"n_max":10},
            {"family":"tree-sieve","k":[3],"count":4,"n_min":6,"n_max":10}]}"#,
    )
    .unwrap();
    let (status, first) = sweep_once(dir.path(), &plan);
    assert_eq!(status, 0);
    let (_, second) = sweep_once(dir.path(), &plan);
    assert_eq!(first, second);
    assert!(first.starts_with("family,n,k,seed,"));
    assert_eq!(first.lines().count(), 1 + 7 + 4);
}

#[test]
fn version_mentions_format() {
    let v = String::from_utf8(ok(&["--version"], b"")).unwrap();
    assert!(v.contains("format v1"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["bogus"], b""), 2);
    assert_eq!(code(&["sparing"], br#"{"n":2,"edges":[[0,0]]}"#), 3);
    assert_eq!(code(&["sparing"], b"not json"), 3);
    let p = ok(&["gen", "path", "--length", "3"], b"");
    assert_eq!(code(&["sieve", "--k", "1"], &p), 4);
    assert_eq!(code(&["label", "--set", "0,1"], &p), 4);
    assert_eq!(code(&["gen", "cycle", "--n", "2"], b""), 4);
    let dense = ok(
        &["gen", "random", "--n", "40", "--p", "0.2", "--seed", "1"],
        b"",
    );
    let out = iasi(&["sparing", "--budget", "5"], &dense);
    assert_eq!(out.status.code(), Some(5));
    let r = json(&out.stdout);
    assert_eq!(r["status"]["kind"], "budget-exceeded");
}
