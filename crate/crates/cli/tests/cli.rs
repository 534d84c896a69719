use std::process::{Command, Output};

use serde_json::Value;

fn spined(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spined"))
        .args(args)
        .env_remove("SPINED_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn generate_edge_list() {
    let out = spined(&["generate", "--topology", "sq", "--n", "6", "--format", "edges"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("64 192"));
    assert_eq!(lines.count(), 192);
}

#[test]
fn generate_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q4.json");
    let out = spined(&["generate", "--topology", "q", "--n", "4", "--format", "json", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 16);
}

#[test]
fn generate_dot() {
    let out = spined(&["generate", "--topology", "sq-recursive", "--n", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches(" -- ").count(), 12);
}

#[test]
fn census_n7() {
    let out = spined(&["census", "--n", "7"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count_v1"], 13);
    assert_eq!(v["count_v2"], 10);
    assert_eq!(v["pass"], true);
}

#[test]
fn edhc_writes_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = spined(&["edhc", "--n", "8", "--verify", "--output-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["files_verified"], true);
    assert_eq!(v["lengths"][0], 256);
    for name in ["sq8_c1.txt", "sq8_c2.txt"] {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert!(!text.trim().is_empty());
    }
}

#[test]
fn edhc_output_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_spined"))
        .args(["edhc", "--n", "5", "--topology", "q"])
        .env("SPINED_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("q5_c1.txt").exists());
    assert!(dir.path().join("q5_c2.txt").exists());
}

#[test]
fn edhc_search_on_small_spined_cube() {
    let dir = tempfile::tempdir().unwrap();
    let out = spined(&["edhc", "--n", "5", "--search", "--seed", "3", "--verify", "--output-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["source"]["kind"], "search");
}

#[test]
fn search_rejects_large_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = spined(&["edhc", "--n", "7", "--search", "--output-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_iso_small_and_large() {
    let out = spined(&["verify-iso", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["isomorphic"], true);
    let out = spined(&["verify-iso", "--n", "9", "--jobs", "2"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["edges_checked"], 512 * 9 / 2);
}

#[test]
fn decompose_reports() {
    let out = spined(&["decompose", "--n", "7"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);
    assert_eq!(v["pass"], true);
}

#[test]
fn orbits_small_and_witness() {
    let v = json(&spined(&["orbits", "--n", "3"]));
    assert_eq!(v["vertex_transitive"], true);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 1);
    let v = json(&spined(&["orbits", "--n", "8"]));
    assert_eq!(v["vertex_transitive"], false);
    assert_eq!(v["witness"]["four_cycle_counts"][0], 18);
    assert_eq!(v["witness"]["four_cycle_counts"][1], 14);
}

#[test]
fn diameter_within_bound() {
    let v = json(&spined(&["diameter", "--n", "8"]));
    assert_eq!(v["diameter"], 5);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["within_bound"], true);
    let v = json(&spined(&["diameter", "--topology", "q", "--n", "5"]));
    assert_eq!(v["diameter"], 5);
}

#[test]
fn out_of_range_exits_two() {
    assert_eq!(spined(&["decompose", "--n", "5"]).status.code(), Some(2));
    assert_eq!(spined(&["census", "--n", "4"]).status.code(), Some(2));
    assert_eq!(spined(&["edhc", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(spined(&["generate", "--n", "4"]).status.code(), Some(2));
    assert_eq!(spined(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(spined(&["generate", "--topology", "sq", "--n", "x"]).status.code(), Some(2));
}
