use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let Output { status, stdout, .. } =
        Command::new(env!("CARGO_BIN_EXE_coxcells")).args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    (status.code().unwrap_or(-1), json)
}

#[test]
fn cells_of_a2() {
    let (code, v) = run(&["cells", "--group", "A2", "--side", "left"]);
    assert_eq!(code, 0);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
    let (code, v) = run(&["cells", "--group", "A2", "--side", "twosided"]);
    assert_eq!(code, 0);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
}

#[test]
fn checks_pass_on_small_groups() {
    for (which, group) in
        [("kottwitz", "B3"), ("left-connected", "H3"), ("tilde-tau", "B3"), ("rsk", "A4"), ("count-identity", "D4")]
    {
        let (code, v) = run(&["check", which, "--group", group]);
        assert_eq!(code, 0, "{which} {group}: {v}");
    }
}

#[test]
fn tau_modes() {
    let (_, simple) = run(&["tau", "--group", "B3", "--mode", "simple"]);
    let (_, strings) = run(&["tau", "--group", "B3", "--mode", "strings"]);
    assert_eq!(simple["mode"], "simple");
    assert!(strings["count"].as_u64().unwrap() > simple["count"].as_u64().unwrap());
}

#[test]
fn lookup_and_intersections() {
    let (code, v) = run(&["lookup", "--group", "A3", "--element", "0,1,0,2"]);
    assert_eq!(code, 0);
    assert!(v["cell"].as_array().unwrap().iter().any(|w| w == &serde_json::json!([0, 1, 0, 2])));
    let (code, v) = run(&["intersections", "--group", "H3", "--cuspidal-only"]);
    assert_eq!(code, 0);
    for row in v["rows"].as_array().unwrap() {
        let total: u64 = row["counts"].as_array().unwrap().iter().map(|c| c[1].as_u64().unwrap()).sum();
        assert_eq!(total, row["c_min"].as_u64().unwrap());
    }
}

#[test]
fn avalues_and_specials() {
    let (code, v) = run(&["avalues", "--group", "B2"]);
    assert_eq!(code, 0);
    let mut a: Vec<u64> = v["two_sided_cells"].as_array().unwrap().iter().map(|c| c["a"].as_u64().unwrap()).collect();
    a.sort_unstable();
    assert_eq!(a, vec![0, 1, 4]);
    let (code, v) = run(&["specials", "--group", "F4"]);
    assert_eq!(code, 0);
    assert_eq!(v["special_dimension_sum"], 72);
}

#[test]
fn resource_and_usage_errors() {
    for group in ["E7", "E8"] {
        let (code, v) = run(&["cells", "--group", group]);
        assert_eq!(code, 2);
        assert!(v["error"].as_str().unwrap().contains("enumeration bound"));
    }
    assert_eq!(run(&["cells", "--group", "Q3"]).0, 2);
    assert_eq!(run(&["check", "rsk", "--group", "B3"]).0, 2);
    assert_eq!(run(&["lookup", "--group", "A2", "--element", "0,x"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}
