use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fermijack")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn jack_one_one() {
    let out = run(&["jack", "--model", "cs", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["energy_text"], "2-4*b^2");
    assert_eq!(v["vector_basis"], "schur");
    let vector = v["vector"].as_array().unwrap();
    assert_eq!(vector.len(), 1);
    assert_eq!(vector[0]["index"], serde_json::json!([1, 1]));
    assert_eq!(vector[0]["coef"]["num"], serde_json::json!([[1, {}]]));
}

#[test]
fn resonance_exits_with_three() {
    let out = run(&["jack", "--model", "cs", "--lambda", "2", "--beta", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2+2β"));
    let out = run(&["jack", "--model", "cs", "--lambda", "2", "--beta-num", "-1", "--beta-den", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn specialized_coupling() {
    let out = run(&["jack", "--model", "cs", "--lambda", "2", "--beta-num", "1", "--beta-den", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["beta"], "1/3");
    assert_eq!(v["energy_text"], "10/3");
}

#[test]
fn identities_suite_passes_to_twelve() {
    let out = run(&["verify", "--suite", "identities", "--max-weight", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 13 * 5);
}

#[test]
fn all_suites_pass_at_small_weight() {
    let out = run(&["verify", "--suite", "all", "--max-weight", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["jack", "--model", "cs", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["jack", "--model", "xy", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(run(&["jack", "--model", "cs", "--lambda", "2", "--beta", "x"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn spectrum_level_two() {
    let v = json(&run(&["spectrum", "--model", "cs", "--level", "2"]));
    let energies: Vec<&str> = v["states"].as_array().unwrap().iter().map(|s| s["energy_text"].as_str().unwrap()).collect();
    assert_eq!(energies, ["4-2*b^2", "2-4*b^2"]);
}

#[test]
fn halperin_state() {
    let out = run(&["halperin", "--lambda", "1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["model"], "halperin");
    assert_eq!(v["vector_basis"], "powersum_a_modes");
    assert!(v["vector"].as_array().unwrap().len() > 1);
    let empty = json(&run(&["halperin", "--lambda", "", "--mu", "2", "--N1", "2"]));
    assert_eq!(empty["N1"], 2);
}

#[test]
fn export_round_trips() {
    let out = run(&["export", "--format", "json", "--model", "cs", "--lambda", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_fermijack"))
        .args(["export", "--format", "json", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&out.stdout).unwrap();
    let again = child.wait_with_output().unwrap();
    assert_eq!(again.stdout, out.stdout);
    let latex = run(&["export", "--format", "latex", "--model", "cs", "--lambda", "2", "--basis", "schur"]);
    assert_eq!(String::from_utf8_lossy(&latex.stdout).trim(), r"s_{2} + \left(\frac{-1+b^2}{1+b^2}\right)s_{1,1}");
}

#[test]
fn output_is_deterministic() {
    let args = ["spectrum", "--model", "laughlin", "--level", "4", "--basis", "monomial"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
