use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const WING: &str = r#"{"n": 3, "b": [[0,-2,-4],[3,0,-6],[2,2,0]]}"#;
const MARKOV: &str = r#"{"n": 3, "b": [[0,-2,2],[2,0,-2],[-2,2,0]]}"#;

fn gfan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfan")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_wing() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "wing.json", WING);
    let o = gfan(&["classify", m.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fan_type"]["triplet"], serde_json::json!(["3", "2", "1"]));
    assert_eq!(v["fan_type"]["case_label"], "A");
    assert_eq!(v["cyclic"], false);

    let o = gfan(&["classify", m.to_str().unwrap()]);
    assert!(stdout(&o).contains("fan type (3,2,1) case A"));
}

#[test]
fn classify_markov_quiver() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", MARKOV);
    let o = gfan(&["classify", m.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["markov_constant"], 4);
    assert_eq!(v["cluster_cyclic"], true);
    assert_eq!(v["fan_type"]["case_label"], "C-1");
}

#[test]
fn rank2_table_ends_with_running_example() {
    let o = gfan(&["rank2", "--a", "3", "--b", "2", "--steps", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["forward"][4], serde_json::json!([5, -12]));
    assert_eq!(v["backward"][4], serde_json::json!([30, -19]));
}

#[test]
fn verify_markov_depth5() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", MARKOV);
    let o = gfan(&["verify", m.to_str().unwrap(), "--depth", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seeds"], 94);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_reference_suite() {
    let o = gfan(&["verify", "--depth", "3", "--seed", "5", "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["corpus"]["seed"], 5);
    let names: Vec<&str> = v["reference"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    assert_eq!(names.iter().filter(|n| n.starts_with("type ")).count(), 8);
}

#[test]
fn explore_save_load_render_composes() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", MARKOV);
    let fan = dir.path().join("fan.json");
    let direct = dir.path().join("direct.svg");
    let via = dir.path().join("via.svg");
    let m = m.to_str().unwrap();
    assert!(gfan(&["explore", m, "--depth", "4", "--out", fan.to_str().unwrap()]).status.success());
    assert!(gfan(&["render", m, "--depth", "4", "--out", direct.to_str().unwrap()]).status.success());
    assert!(gfan(&["render", fan.to_str().unwrap(), "--out", via.to_str().unwrap()]).status.success());
    let a = std::fs::read(&direct).unwrap();
    assert_eq!(a, std::fs::read(&via).unwrap());
    assert!(String::from_utf8(a).unwrap().starts_with("<?xml"));
}

#[test]
fn pair_on_rank4() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "r4.json",
        r#"{"n": 4, "b": [[0,-2,-4,-4],[3,0,-6,6],[2,2,0,0],[2,-2,0,0]]}"#,
    );
    let o = gfan(&["pair", m.to_str().unwrap(), "--i", "1", "--j", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["limit_ray"][2]["exact"], "0");
    assert_eq!(v["limit_ray"][3]["exact"], "3 + sqrt(3)");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"b\": [[0, 1], [1, 0]]}");
    assert_eq!(gfan(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gfan(&["classify", "/nonexistent/m.json"]).status.code(), Some(2));
    assert_eq!(gfan(&["frobnicate"]).status.code(), Some(2));
    let m = write(dir.path(), "m.json", MARKOV);
    let o = gfan(&["explore", m.to_str().unwrap(), "--depth", "8", "--max-cones", "20"]);
    assert_eq!(o.status.code(), Some(3));
    let r2 = write(dir.path(), "r2.json", r#"{"n": 2, "b": [[0,-2],[3,0]]}"#);
    assert_eq!(gfan(&["classify", r2.to_str().unwrap()]).status.code(), Some(1));
}
