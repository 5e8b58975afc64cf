use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn systems() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../systems")
}

fn weyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl")).args(args).output().expect("binary runs")
}

fn sys(name: &str) -> String {
    systems().join(name).to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn invariants_of_d_infinity() {
    let v = json(&weyl(&["invariants", &sys("d_inf.json")]));
    assert_eq!(v["ends"], 2);
    assert_eq!(v["cd_q"], 1);
    assert_eq!(v["vcd"]["exact"], 1);
    assert!(v["provenance"]["ends"].as_array().unwrap().contains(&"XI_J_ROUTE".into()));
}

#[test]
fn invariants_with_thickness() {
    let v = json(&weyl(&["invariants", &sys("d_inf.json"), "--thickness", "s=2,t=3"]));
    let notes = v["weyl_notes"].to_string();
    assert!(notes.contains("(3,4)-semiregular"), "{notes}");
}

#[test]
fn decompose_free3_as_dot() {
    let out = weyl(&["decompose", &sys("free3.json"), "--predicate", "spherical", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("W{a,b}") && dot.contains("W{c}"));
    assert_eq!(dot.matches(" -- ").count(), 1);
}

#[test]
fn decompose_failure_is_an_input_error() {
    let out = weyl(&["decompose", &sys("affine_a2.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("{a,b,c}"));
    let v = json(&weyl(&["decompose", &sys("affine_a2.json"), "--strategy", "iterated-split"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
}

#[test]
fn duplicate_generator_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"generators": ["a", "a"], "labels": {}}"#).unwrap();
    let out = weyl(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate generator"));
}

#[test]
fn limit_breach_exits_with_two() {
    let out = weyl(&["growth", &sys("free3.json"), "--radius", "10", "--max-ball-elements", "50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit exceeded"));
}

#[test]
fn unknown_flag_is_an_input_error() {
    let out = weyl(&["ends", &sys("d_inf.json"), "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["davis", &sys("pentagon_inf.json"), "--table"];
    let a = weyl(&args);
    let b = weyl(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["cd_q"], 2);
}

#[test]
fn batch_over_directory() {
    let dir = systems();
    let v = json(&weyl(&["ends", "--each", dir.to_str().unwrap()]));
    assert_eq!(v["d_inf.json"]["ends"], 2);
    assert_eq!(v["free3.json"]["ends"], "inf");
    assert_eq!(v["a2.json"]["ends"], 0);
}

#[test]
fn coset_graph_finds_cycle() {
    let gog = sys("gog/affine_a2_split.json");
    let v = json(&weyl(&["coset-graph", &sys("affine_a2.json"), "--gog", &gog, "--radius", "4"]));
    assert_eq!(v["verdict"], "CYCLE_FOUND");
    assert!(v["caveat"].as_str().unwrap().contains("necessary but not sufficient"));
}

#[test]
fn decompose_output_feeds_coset_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = weyl(&["decompose", &sys("free3.json")]);
    assert!(out.status.success());
    let gog = dir.path().join("gog.json");
    std::fs::write(&gog, &out.stdout).unwrap();
    let v = json(&weyl(&["coset-graph", &sys("free3.json"), "--gog", gog.to_str().unwrap(), "--radius", "3"]));
    assert_eq!(v["verdict"], "ACYCLIC_CONNECTED");
}

#[test]
fn growth_double_cosets_and_graphs() {
    let v = json(&weyl(&["growth", &sys("d_inf.json"), "--radius", "3", "--t", "1"]));
    assert_eq!(v["sphere_sizes"], serde_json::json!([1, 2, 2, 2]));
    assert_eq!(v["poincare_partial"]["value"], "7");
    let v = json(&weyl(&["double-cosets", &sys("d_inf.json"), "--max", "36", "--thickness", "s=2,t=3"]));
    assert_eq!(v["counts"]["6"], 2);
    assert_eq!(v["counts"]["36"], 2);
    let v = json(&weyl(&["chamber-graph", &sys("a2.json"), "--radius", "3"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let v = json(&weyl(&["ends-estimate", &sys("d_inf.json"), "--r", "1", "--R", "4"]));
    assert_eq!(v["estimate"], 2);
    let out = weyl(&["ends-estimate", &sys("d_inf.json"), "--r", "4", "--R", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_reports_types() {
    let v = json(&weyl(&["classify", &sys("compact_square.json")]));
    assert_eq!(v["components"][0]["family"], "HYPERBOLIC_COMPACT");
    assert_eq!(v["signature"]["negative"], 1);
    assert_eq!(v["maximal_spherical_subsets"].as_array().unwrap().len(), 4);
}
