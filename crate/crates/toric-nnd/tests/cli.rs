use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toric-nnd"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toric-nnd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn report_is_byte_deterministic() {
    let p = data("b1_facet.json");
    let a = run(&["report", p.to_str().unwrap()]);
    let b = run(&["report", p.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    assert_eq!(j["reduction"]["steps"][0]["ell_plus"], serde_json::json!([5, 0, 1]));
    assert_eq!(j["canonical_cycle"]["agree"], true);
}

#[test]
fn rationals_are_strings() {
    let out = run(&["invariants", data("cyclic_quotient.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["canonical_cycle"]["adjunction"][0], "1/3");
    assert_eq!(j["graph"]["normal_form"]["summary"], "1 vertex, euler -3, genus 0");
    assert_eq!(j["pointed"]["integers"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    let p = |n: &str| data(n).to_str().unwrap().to_string();
    assert_eq!(code(&["fan", &p("brieskorn_2_3_7.json")]), Some(0));
    assert_eq!(code(&["seq", &p("cyclic_quotient.json")]), Some(3));
    assert_eq!(code(&["reduce", &p("non_isolated.json")]), Some(3));
    assert_eq!(code(&["invariants", &p("cyclic_quotient.json"), "--delta-shell-cap", "0"]), Some(4));
    assert_eq!(code(&["graph", &p("plane_curve.json")]), Some(2));
    assert_eq!(code(&["seq", &p("brieskorn_2_3_7.json"), "--root", "5"]), Some(2));
    assert_eq!(code(&["fan", "/nonexistent/input.json"]), Some(2));
    assert_eq!(code(&["nonsense"]), Some(2));
}

#[test]
fn malformed_input_reports_position() {
    let out = run_stdin(&["fan", "-"], "{\"rank\":3,\n\"cone\":[[1,0,0],[0,1,0],[0,0,1]],\n\"support\":[[1,0]]}");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn dot_and_json_files() {
    let (dot, js) = (tmp("g.dot"), tmp("r.json"));
    let out = run(&[
        "graph",
        data("cyclic_quotient.json").to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        js.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("graph plumbing {"));
    assert!(dot.contains("v0 [label=\"-9\\n[0]\", shape=circle];"));
    assert_eq!(dot.matches(" -- ").count(), 12);
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(js).unwrap()).unwrap();
    assert_eq!(j["command"], "graph");
}

#[test]
fn options_in_document() {
    let out = run_stdin(
        &["seq", "-"],
        r#"{"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],"support":[[2,0,0],[0,3,0],[0,0,7]],"options":{"root":0,"delta_shell_cap":8}}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["pg_sequence"], 1);
    assert_eq!(j["sequence"]["root"], 0);
}
