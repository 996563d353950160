use std::process::{Command, Output};

use serde_json::Value;

fn twistor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = twistor(&all);
    (serde_json::from_slice(&o.stdout).expect("valid json"), o.status.code().unwrap())
}

#[test]
fn passing_check_exits_zero() {
    let o = twistor(&["verify", "--check", "C11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C11  PASS"));
}

#[test]
fn checks_can_be_named_by_title() {
    let (v, code) = json(&["verify", "--check", "fpp-contradiction"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["name"], "C11");
}

#[test]
fn unknown_check_is_a_usage_error() {
    let o = twistor(&["verify", "--check", "C99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("C99"));
}

#[test]
fn verify_json_has_the_documented_shape() {
    let (v, _) = json(&["verify", "--check", "C2", "--check", "C12"]);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["inputs"]["checks"], serde_json::json!(["C2", "C12"]));
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    for r in results {
        for key in ["name", "title", "paper", "status", "witness", "notes"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["verify", "--check", "C7", "--format", "json"];
    assert_eq!(twistor(&args).stdout, twistor(&args).stdout);
    let args = ["diamond", "--kind", "hodge", "--b1", "4", "--bplus", "3", "--bminus", "3", "--h11", "4", "--h12", "4", "--format", "json"];
    assert_eq!(twistor(&args).stdout, twistor(&args).stdout);
}

#[test]
fn bott_chern_diamond_of_the_torus_leaves_symbols() {
    let (v, code) = json(&["diamond", "--kind", "bc", "--b1", "4", "--bplus", "3", "--bminus", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "bott_chern");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    let at = |p: u64, q: u64| entries.iter().find(|e| e["p"] == p && e["q"] == q).unwrap().clone();
    assert_eq!(at(0, 0)["value"], 1);
    assert_eq!(at(3, 1)["value"], 3);
    assert_eq!(at(3, 2)["value"], 4);
    assert_eq!(at(1, 1)["symbol"], "h11");
}

#[test]
fn ddbar_fails_for_the_torus() {
    let o = twistor(&["ddbar", "--b1", "4", "--bplus", "3", "--bminus", "3", "--h11bc", "4", "--h11a", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NO: Δ²=1"));
}

#[test]
fn ddbar_holds_for_a_simply_connected_profile() {
    let (v, code) = json(&["ddbar", "--b1", "0", "--bplus", "0", "--bminus", "0", "--h11bc", "1", "--h11a", "1", "--h12bc", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    assert!(v["bc_diamond"].is_object());
}

#[test]
fn ddbar_without_required_numbers_is_a_usage_error() {
    let o = twistor(&["ddbar", "--b1", "4", "--bplus", "3", "--bminus", "3", "--h11bc", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_prints_the_canonical_form() {
    let o = twistor(&["eval", "(mb*dzb1 - dz2)/(1+m*mb)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sb1\n");
    let o = twistor(&["eval", "sb1", "--apply", "d"]);
    assert_eq!(stdout(&o), "-1/(m*mb + 1) * s2*dmb - mb/(m*mb + 1) * dm*sb1\n");
}

#[test]
fn eval_json_records_inputs() {
    let (v, code) = json(&["eval", "s1", "--apply", "conj"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["apply"], "conj");
    assert_eq!(v["inputs"]["metric"], Value::Null);
    assert_eq!(v["result"], "sb1");
}

#[test]
fn star_needs_a_metric() {
    assert_eq!(twistor(&["eval", "s1", "--apply", "astar"]).status.code(), Some(2));
    assert_eq!(twistor(&["eval", "s1", "--apply", "astar", "--metric", "paper"]).status.code(), Some(0));
}

#[test]
fn malformed_expression_is_a_usage_error() {
    let o = twistor(&["eval", "s1 * (m +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn frolicher_reports_a_contradiction_for_fake_projective_planes() {
    let (v, code) = json(&["frolicher", "--b1", "0", "--bplus", "1", "--bminus", "0", "--regular"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "contradiction");
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn frolicher_is_consistent_for_the_torus() {
    let o = twistor(&["frolicher", "--b1", "4", "--bplus", "3", "--bminus", "3"]);
    assert!(stdout(&o).contains("h11=4"));
}

#[test]
fn bad_flag_values_exit_two() {
    assert_eq!(twistor(&["diamond", "--kind", "nope", "--b1", "0", "--bplus", "0", "--bminus", "0"]).status.code(), Some(2));
    assert_eq!(twistor(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_all_exit_code_tracks_failures() {
    let (v, code) = json(&["verify", "--all"]);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 12);
    let any_failed = results.iter().any(|r| r["status"] != "pass");
    assert_eq!(code, if any_failed { 1 } else { 0 });
}
