use std::process::Command;

use serde_json::Value;
use ssb::cli::run_cli;

fn run(args: &[&str]) -> ssb::cli::CliOutput {
    run_cli(std::iter::once("ssb").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn invariants_json_keys() {
    let v = json(&["invariants", "gamma(2,3,1)", "--char", "0", "--json"]);
    assert_eq!(v["spec"], "gamma(2,3,1)");
    assert_eq!(v["dimension"], 28);
    // r(p+q-2) = 3 is odd: invariants 1, 1, 2, 2r
    assert_eq!(v["cartan_invariants"], serde_json::json!([1, 1, 2, 2]));
    assert_eq!(v["cartan_det"], 4);
    assert_eq!(v["centre_dim"], 5);
    assert_eq!(v["hh"]["1"], 2);
    assert!(v.get("kulshammer").is_none());

    let v = json(&["invariants", "gamma(2,2,1)", "--char", "0", "--json"]);
    assert_eq!(v["cartan_invariants"], serde_json::json!([1, 1, 4]));

    let v = json(&["invariants", "gamma(2,2,3)", "--char", "2", "--json"]);
    assert_eq!(v["kulshammer"]["commutator_dim"], 44);
    assert_eq!(v["kulshammer"]["quotient_radical_layers"][1], 1);
}

#[test]
fn classify_char_two() {
    let out = run(&["classify", "derived", "gamma(1,1,1)", "lambda(1,1,2,2)", "--char", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("inequivalent"), "{}", out.stdout);
    let v = json(&["classify", "derived", "gamma(1,1,1)", "lambda(1,1,2,2)", "--char", "2", "--json", "--audit"]);
    assert_eq!(v["result"], "inequivalent");
    assert_eq!(v["separator"]["left"], 8);
    assert_eq!(v["separator"]["right"], 5);
    assert_eq!(v["audit"]["passed"], true);

    let v = json(&["classify", "iso", "gamma(1,1,1)", "lambda(1,1,2,2)", "--char", "3", "--json"]);
    assert_eq!(v["result"], "equivalent");
}

#[test]
fn stable_separator_is_cartan() {
    let v = json(&["classify", "stable", "nakayama(3,2)", "nakayama(3,3)", "--json", "--audit"]);
    assert_eq!(v["result"], "inequivalent");
    assert_eq!(v["separator"]["left"], 7);
    assert_eq!(v["separator"]["right"], 10);
    assert_eq!(v["audit"]["passed"], true);
}

#[test]
fn hh_command() {
    let v = json(&["hh", "gamma(3,4,2)", "--char", "2", "--max-degree", "4", "--json"]);
    assert_eq!(v["hh"]["4"], 4);
    let out = run(&["hh", "lambda(1,2,2,2)", "--max-degree", "3"]);
    assert_eq!(out.code, 1);
}

#[test]
fn build_and_dot() {
    let v = json(&["build", "gamma(2,2,1)", "--json"]);
    assert_eq!(v["dimension"], 18);
    assert_eq!(v["vertices"], 3);
    assert_eq!(v["structure"]["special_biserial"], true);
    let out = run(&["build", "gamma(2,3,1)", "--dot"]);
    assert_eq!(out.code, 0);
    for label in ["\"1\"", "\"2\"", "\"3\"", "\"4\""] {
        assert!(out.stdout.contains(label), "{}", out.stdout);
    }
}

#[test]
fn documents_from_files() {
    let dir = std::env::temp_dir().join(format!("ssb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("g111.ssb");
    std::fs::write(
        &good,
        "algebra { char = 3\n  vertices = [1]\n  arrows = [ a: 1 -> 1, b: 1 -> 1 ]\n  relations = [ a*b - b*a, a*a, b*b ]\n}\n",
    )
    .unwrap();
    let v = json(&["invariants", good.to_str().unwrap(), "--json"]);
    assert_eq!(v["char"], 3);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["centre_dim"], 4);
    assert_eq!(run(&["invariants", good.to_str().unwrap(), "--char", "5"]).code, 2);
    // a presentation without a family cannot be classified
    assert_eq!(run(&["classify", "iso", good.to_str().unwrap(), "gamma(1,1,1)"]).code, 2);

    let bad = dir.join("bad.ssb");
    std::fs::write(&bad, "algebra { char = 4\n vertices = [1] arrows = [] relations = [] }").unwrap();
    let out = run(&["build", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("parse error at 1:18"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["classify", "sideways", "gamma(1,1,1)", "gamma(1,1,1)"]).code, 2);
    assert_eq!(run(&["invariants", "gamma(0,1,1)"]).code, 2);
    assert_eq!(run(&["invariants", "gamma(1,1,1)", "--char", "6"]).code, 2);
    assert_eq!(run(&["verify", "paper-suite", "--chars", "0,4"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn length_bound_is_honoured() {
    let out = run(&["build", "gamma(2,2,2)", "--len-bound", "3"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_ssb"))
        .args(["build", "gamma(2,2,2)"])
        .env("SSB_LEN_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_ssb"))
        .args(["build", "gamma(2,2,2)", "--len-bound", "100"])
        .env("SSB_LEN_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
