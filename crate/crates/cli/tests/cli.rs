use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucharmap")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn chartable_u1_is_cube_roots() {
    let out = run(&["chartable", "--n", "1", "--q", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["conductor"], 3);
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    assert!(values.iter().all(|r| r.as_array().unwrap().len() == 3));
    let csv = String::from_utf8(run(&["chartable", "--n", "1", "--q", "2", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().nth(2).unwrap().contains("1*z3"));
}

#[test]
fn degree_sum_passes() {
    let out = run(&["verify", "degree-sum", "--m", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "PASS");
    assert!(v["checks"][0]["detail"].as_str().unwrap().starts_with("value 12 "));
}

#[test]
fn verify_all_small() {
    let out = run(&["verify", "all", "--n", "2", "--q", "2", "--format", "pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 9);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("elapsed_ms"));
}

#[test]
fn deterministic() {
    for args in [&["chartable", "--n", "2", "--q", "3", "--parallel"][..], &["degrees", "--n", "3", "--format", "csv"], &["bruteforce"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn invalid_config_exit_two() {
    for args in [&["classes", "--q", "6"][..], &["classes", "--n", "0"], &["decompose", "sp-induction", "--r", "1"], &["bruteforce", "--n", "3"], &["nonsense"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("json on stderr");
        assert!(err["message"].is_string());
    }
}

#[test]
fn bruteforce_report() {
    let v = json(&run(&["bruteforce", "--n", "2", "--q", "2"]));
    assert_eq!(v["order"], 18);
    assert_eq!(v["symmetric_count"], 12);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 9);
    assert!(classes.iter().all(|c| c["size"].to_string() == c["expected"].as_str().unwrap()));
    let fs = v["fs_indicators"].as_object().unwrap();
    assert_eq!(fs.len(), 9);
    assert!(fs.values().all(|e| e == "1"));
}

#[test]
fn decompositions() {
    let v = json(&run(&["decompose", "gelfand-graev", "--m", "2", "--q", "2"]));
    assert_eq!(v["degree"], "9");
    assert!(v["multiplicities"].as_array().unwrap().iter().all(|m| m["mult"] == "1"));
    let v = json(&run(&["decompose", "model", "--m", "3", "--q", "3"]));
    assert_eq!(v["covers_once"], true);
    let v = json(&run(&["decompose", "sp-induction", "--r", "1", "--q", "2", "--allow-even-q"]));
    assert_eq!(v["conjectural"], true);
}

#[test]
fn orbit_counts() {
    let v = json(&run(&["orbits", "--m", "3", "--q", "2"]));
    let d: Vec<&str> = v["orbit_counts"].as_array().unwrap().iter().map(|x| x["d"].as_str().unwrap()).collect();
    assert_eq!(d, ["3", "0", "2"]);
    assert_eq!(v["theta"].as_array().unwrap().len(), 5);
}

#[test]
fn classes_sum_to_order() {
    let v = json(&run(&["classes", "--n", "2", "--q", "3"]));
    let total: u64 = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total.to_string(), v["order"].as_str().unwrap());
}
