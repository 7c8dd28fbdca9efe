use std::process::{Command, Output};

use albert_e6::text::{format_vector, parse_vector, parse_word};
use albert_e6_core::albert::Albert;
use albert_e6_core::gf::Gf;
use albert_e6_core::se6::apply_word;
use serde_json::Value;

fn albert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albert-e6"))
        .args(args)
        .env_remove("ALBERT_E6_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = albert(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_white_representative() {
    let v = json(&["classify", "--q", "2", "(0,0,1|0;0;0)"]);
    assert_eq!(v["schema"], "albert-e6/1");
    assert_eq!(v["color"], "white");
    assert_eq!(v["delta"], "0");
}

#[test]
fn classify_colours_over_gf3() {
    let black = json(&["--q", "3", "classify", "(1,1,1|0;0;0)"]);
    assert_eq!((black["color"].as_str(), black["delta"].as_str()), (Some("black"), Some("1")));
    let grey = json(&["--q", "3", "classify", "(0,1,1|0;0;0)"]);
    assert_eq!(grey["color"], "grey");
}

#[test]
fn count_white_formula() {
    let v = json(&["count-white", "--q", "2", "--method", "formula"]);
    assert_eq!(v["white_vectors"], 139503);
    let v = json(&["count-white", "--q", "3", "--method", "formula"]);
    assert_eq!(v["white_vectors"], 130747526);
}

#[test]
fn verify_commutators_exit_zero() {
    let out = albert(&["verify", "--q", "2", "--suite", "commutators", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let out = albert(&["classify", "(0,0,1|0;0;0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 12") && err.contains("expected ')'"), "{err}");
    assert_eq!(albert(&["--q", "6", "order"]).status.code(), Some(2));
    assert_eq!(albert(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(albert(&["--help"]).status.code(), Some(0));
}

#[test]
fn reduce_word_reaches_representative() {
    let j = Albert::new(Gf::from_order(3).unwrap());
    for input in ["(1,2,0|[1,0,0,0,0,0,0,1];0;[0,0,2,0,0,0,0,0])", "(0,0,0|0;[0,1,0,0,2,0,0,0];0)", "(2,1,1|0;0;0)"] {
        let v = json(&["--q", "3", "reduce", input]);
        let word = parse_word(j.octonions(), v["word"].as_str().unwrap()).unwrap();
        let reached = apply_word(&j, &word, &parse_vector(&j, input).unwrap()).unwrap();
        assert_eq!(format_vector(j.field(), &reached), v["representative"].as_str().unwrap(), "{input}");
    }
}

#[test]
fn same_seed_is_byte_identical() {
    let args = ["--q", "5", "--seed", "11", "--no-timing", "verify", "--suite", "reduction", "--samples", "3000"];
    let a = albert(&args);
    let b = albert(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |t: &str| {
        albert(&[
            "--q",
            "3",
            "--seed",
            "3",
            "--no-timing",
            "--threads",
            t,
            "verify",
            "--suite",
            "generators",
            "--samples",
            "5000",
        ])
        .stdout
    };
    assert_eq!(run("1"), run("3"));
    let env = Command::new(env!("CARGO_BIN_EXE_albert-e6"))
        .args(["--q", "3", "--seed", "3", "--no-timing", "verify", "--suite", "generators", "--samples", "5000"])
        .env("ALBERT_E6_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, run("1"));
}

#[test]
fn formats() {
    let out = albert(&["--format", "csv", "--no-timing", "order", "--q", "2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let mut lines = s.lines();
    assert!(lines.next().unwrap().starts_with("schema,command,q,"));
    assert!(lines.next().unwrap().starts_with("albert-e6/1,order,2,"));
    let out = albert(&["--format", "text", "classify", "(0,0,1|0;0;0)"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("color: white\n"));
}

#[test]
fn stabiliser_orbit_of_axis_point() {
    let v = json(&["orbit", "--start", "(1,0,0|0;0;0)", "--gens", "stabiliser"]);
    assert_eq!(v["orbit_size"], 134912);
}
