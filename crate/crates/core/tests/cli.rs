use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn treeloc(args: &[&str]) -> Output {
    let out = std::env::temp_dir().join(format!("treeloc-cli-{}", std::process::id()));
    Command::new(env!("CARGO_BIN_EXE_treeloc"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("TREELOC_OUT_DIR", out)
        .output()
        .expect("runs")
}

fn json(args: &[&str]) -> Value {
    let out = treeloc(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn enumerates_small_trees() {
    let v = json(&["--json", "--max-vertices", "1", "--max-arity", "2", "tree", "enum"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn localizes_the_worked_example() {
    let v = json(&["--json", "localize", "pl", "data/worked_example.json"]);
    assert_eq!(v["values"], serde_json::json!([0, 1, 2, 4, 4]));
    for flavour in ["cyc", "sym", "abs"] {
        json(&["--json", "localize", flavour, "data/worked_example.json"]);
    }
}

#[test]
fn canonical_forms_agree() {
    let a = json(&["--json", "tree", "canon", "((ee)e)", "--kind", "sym"]);
    let b = json(&["--json", "tree", "canon", "(e(ee))", "--kind", "sym"]);
    assert_eq!(a, b);
}

#[test]
fn check_exit_codes() {
    assert!(Path::new(env!("CARGO_MANIFEST_DIR")).join("data/two_triangles.json").exists());
    assert_eq!(treeloc(&["check", "2segal", "data/nerve_z2.json"]).status.code(), Some(0));
    assert_eq!(treeloc(&["check", "2segal", "data/two_triangles.json"]).status.code(), Some(1));
    assert_eq!(treeloc(&["check", "invertible", "data/terminal_operad.json"]).status.code(), Some(0));
    assert_eq!(treeloc(&["check", "invertible", "data/poset_operad.json"]).status.code(), Some(1));
    assert_eq!(treeloc(&["hom", "nope", "e"]).status.code(), Some(2));
    assert_eq!(treeloc(&["check", "2segal", "data/missing.json"]).status.code(), Some(2));
}

#[test]
fn roundtrips_through_files() {
    assert_eq!(treeloc(&["roundtrip", "data/nerve_z2.json"]).status.code(), Some(0));
    assert_eq!(treeloc(&["roundtrip", "data/terminal_operad.json"]).status.code(), Some(0));
    let o = json(&["to-operad", "data/nerve_z2.json"]);
    assert!(o["colors"].as_array().is_some());
}
