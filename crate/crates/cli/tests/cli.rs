use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with(args, None, &[])
}

fn run_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prism-fixer"));
    cmd.args(args)
        .env_remove("PRISM_FIXER_GUARD")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(stdout(o).trim()).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

fn corpus(n: usize) -> String {
    format!("{}/../core/tests/data/graphs{n}.g6", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn gamma_examples() {
    let v = json(&run(&["gamma", "--g6", "Cl", "--json"]));
    assert_eq!(v["kind"], "gamma");
    assert_eq!(v["payload"]["gamma"], 2);
    assert_eq!(json(&run(&["gamma", "--g6", "C~", "--json"]))["payload"]["gamma"], 1);
    let o = run_with(&["gamma", "--edges", "-", "--json"], Some("2\n"), &[]);
    assert_eq!(json(&o)["payload"]["gamma"], 2);
    assert!(stdout(&run(&["gamma", "--g6", "Cl"])).starts_with("γ = 2\n"));
}

#[test]
fn gamma_all_lists_every_set() {
    let v = json(&run(&["gamma", "--g6", "Cl", "--all", "--json"]));
    let sets = v["payload"]["gamma_sets"].as_array().unwrap();
    assert_eq!(sets.len(), 6);
    assert!(sets.contains(&serde_json::json!([0, 2])));
}

#[test]
fn graph_file_and_edge_format() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("c4.g6");
    std::fs::write(&g6, ">>graph6<<Cl\n").unwrap();
    let v = json(&run(&["gamma", g6.to_str().unwrap(), "--json"]));
    assert_eq!(v["payload"]["graph"], "Cl");
    let edges = dir.path().join("p3.txt");
    std::fs::write(&edges, "3\n0 1\n1 2\n").unwrap();
    let v = json(&run(&["gamma", edges.to_str().unwrap(), "--format", "edges", "--json"]));
    assert_eq!(v["payload"]["gamma"], 1);
}

#[test]
fn parse_errors_exit_1() {
    let o = run(&["gamma", "--g6", "C"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
    let o = run_with(&["gamma", "--edges", "-"], Some("2\n0 5\n"), &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["gamma"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn adversary_certificate() {
    let v = json(&run(&["adversary", "--g6", "Cl", "--json"]));
    assert_eq!(v["kind"], "adversary");
    let p = &v["payload"];
    assert_eq!(p["status"], "certified");
    assert_eq!((p["gamma"].as_u64(), p["prism_gamma"].as_u64()), (Some(2), Some(3)));
    assert_eq!(p["pi"], serde_json::json!([1, 3, 2, 0]));
    assert_eq!(p["passed"], true);
    let text = stdout(&run(&["adversary", "--g6", "Cl"]));
    assert!(text.contains("(0 1 3)"));
    assert!(text.contains("0'"));
    assert!(text.contains("PASS"));
}

#[test]
fn adversary_exit_codes() {
    let o = run(&["adversary", "--g6", "C~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no C3-free vertex"));
    // K4 has no C3-free vertex at all, so naming one is a bad vertex
    assert_eq!(run(&["adversary", "--g6", "C~", "--vertex", "0"]).status.code(), Some(3));
    assert_eq!(run(&["adversary", "--g6", "Cl", "--vertex", "7"]).status.code(), Some(3));
    // isolated vertex 2 of K2 + K1
    assert_eq!(run(&["adversary", "--g6", "B_", "--vertex", "2"]).status.code(), Some(3));
    let v = json(&run(&["adversary", "--g6", "Cl", "--vertex", "2", "--json"]));
    assert_eq!(v["payload"]["x"], 2);
}

#[test]
fn random_derangement_needs_seed() {
    assert_eq!(run(&["adversary", "--g6", "Cl", "--random-derangement"]).status.code(), Some(1));
    let args = ["adversary", "--g6", "IheA@GUAo", "--random-derangement", "--seed", "11", "--guard", "10", "--json"];
    let a = json(&run(&args));
    assert_eq!(a["payload"]["passed"], true);
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn fixer_examples() {
    let v = json(&run(&["fixer", "--g6", "A?", "--json"]));
    assert_eq!(v["payload"]["is_universal_fixer"], true);
    let v = json(&run(&["fixer", "--g6", "A_", "--json"]));
    assert_eq!(v["payload"]["is_universal_fixer"], false);
    assert_eq!(v["payload"]["witness_pi"], serde_json::json!([0, 1]));
    let text = stdout(&run(&["fixer", "--g6", "Cl"]));
    assert!(text.starts_with("universal fixer: no\n"));
    assert!(text.contains("witness: 0 1 3 2"));
}

#[test]
fn guard_exit_4_and_env_override() {
    let petersen = "IheA@GUAo";
    assert_eq!(run(&["fixer", "--g6", petersen]).status.code(), Some(4));
    assert_eq!(run_with(&["fixer", "--g6", "Cl"], None, &[("PRISM_FIXER_GUARD", "3")]).status.code(), Some(4));
    // the flag wins over the environment
    let o = run_with(&["fixer", "--g6", "Cl", "--guard", "4"], None, &[("PRISM_FIXER_GUARD", "3")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["adversary", "--g6", petersen, "--guard", "9"]).status.code(), Some(4));
    assert_eq!(run(&["adversary", "--g6", petersen, "--guard", "10"]).status.code(), Some(0));
}

#[test]
fn probe_reports_no_discrepancies() {
    let v = json(&run(&["probe", "--g6", "Cl", "--json"]));
    assert_eq!(v["kind"], "probe");
    assert_eq!(v["payload"]["permutations_tested"], 24);
    assert_eq!(v["payload"]["discrepancies"], serde_json::json!([]));
    assert_eq!(run(&["probe", "--g6", "C?"]).status.code(), Some(1));
}

#[test]
fn analyze_json() {
    let v = json(&run(&["analyze", "--g6", "Cl", "--pi", "1 3 2 0", "--json"]));
    let p = &v["payload"];
    assert_eq!(p["girth"], serde_json::json!({"finite": 4}));
    assert_eq!(p["separable"].as_array().unwrap().len(), 4);
    assert_eq!(p["prism"]["prism_gamma"], 3);
    assert_eq!(json(&run(&["analyze", "--g6", "Bg", "--json"]))["payload"]["girth"], "infinite");
}

fn sweep_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn sweep_four_vertex_graphs() {
    let o = run(&["sweep", &corpus(4)]);
    assert_eq!(o.status.code(), Some(0));
    let lines = sweep_lines(&stdout(&o));
    let summary = lines.last().unwrap();
    assert_eq!(summary["kind"], "sweep-summary");
    let s = &summary["payload"];
    assert_eq!(s["graphs"], 11);
    assert_eq!(s["universal_fixers"], serde_json::json!(["C?"]));
    assert_eq!(s["conjecture_holds"], true);
    let fixers: Vec<&str> = lines
        .iter()
        .filter(|l| l["kind"] == "fixer")
        .map(|l| l["payload"]["graph"].as_str().unwrap())
        .collect();
    assert_eq!(fixers.len(), 11);
    assert!(fixers.windows(2).all(|w| w[0] <= w[1]));
    assert!(lines.iter().filter(|l| l["kind"] == "adversary").all(|l| l["payload"]["passed"] == true));
}

#[test]
fn sweep_empty_and_malformed() {
    let o = run_with(&["sweep", "-"], Some(""), &[]);
    let lines = sweep_lines(&stdout(&o));
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["payload"]["graphs"], 0);
    let o = run_with(&["sweep", "-"], Some("Cl\nC\nA_\n"), &[]);
    assert_eq!(o.status.code(), Some(0));
    let lines = sweep_lines(&stdout(&o));
    let s = &lines.last().unwrap()["payload"];
    assert_eq!(s["graphs"], 2);
    assert_eq!(s["failures"].as_array().unwrap().len(), 1);
    assert_eq!(s["failures"][0]["line"], 2);
}

#[test]
fn sweep_is_deterministic_across_jobs_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let one = stdout(&run(&["sweep", &corpus(6), "--jobs", "1"]));
    let o = run(&["sweep", &corpus(6), "--jobs", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), one);
    let timed = run(&["sweep", &corpus(6), "--timing"]);
    assert_eq!(stdout(&timed), one);
    assert!(String::from_utf8_lossy(&timed.stderr).starts_with("elapsed"));
}
