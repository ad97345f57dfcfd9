use std::path::Path;
use std::process::{Command, Output};

fn circgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circgeo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn counterexample_file(dir: &Path) -> String {
    // G is the closure system of the single implication a0 a1 a2 -> x y
    let path = dir.join("g.json");
    std::fs::write(
        &path,
        r#"{"elements": ["a0", "a1", "a2", "x", "y"],
            "implications": [{"lhs": ["a0", "a1", "a2"], "rhs": ["x", "y"]}]}"#,
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn carousel_counterexample_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = counterexample_file(dir.path());
    let o = circgeo(&["carousel", &g, "--rule", "weak-2x3"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["counterexample"];
    assert_eq!(c["s"], serde_json::json!(["a0", "a1", "a2"]));
    let mut pair = [c["x"].as_str().unwrap(), c["y"].as_str().unwrap()];
    pair.sort();
    assert_eq!(pair, ["x", "y"]);
    assert_eq!(circgeo(&["verify", &g]).status.code(), Some(0));
}

#[test]
fn cdim_of_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let g = counterexample_file(dir.path());
    let o = circgeo(&["cdim", &g, "--max-k", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 6);
    assert_eq!(v["exhaustive_below"], true);
}

#[test]
fn realize_then_classify_then_render() {
    let dir = tempfile::tempdir().unwrap();
    let o = circgeo(&["realize", "--class", "S36", "--seed", "5", "--ci"]);
    assert_eq!(o.status.code(), Some(0));
    let scene = dir.path().join("s.json");
    std::fs::write(&scene, stdout(&o)).unwrap();
    let scene = scene.to_str().unwrap();
    let o = circgeo(&["classify", scene]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "S36");
    let svg = dir.path().join("f.svg");
    let o = circgeo(&["render", scene, "--out", svg.to_str().unwrap(), "--regions"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains(">x</text>") && text.contains(">y</text>"));
}

#[test]
fn fuzz_is_reproducible() {
    let a = circgeo(&["fuzz-thm1", "--trials", "500", "--seed", "1"]);
    let b = circgeo(&["fuzz-thm1", "--trials", "500", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = circgeo(&["fuzz-thm2", "--trials", "100", "--seed", "7"]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn ci_mode_requires_a_seed() {
    let o = circgeo(&["--ci", "fuzz-thm1", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = circgeo(&["fuzz-thm1", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed: "));
}

#[test]
fn malformed_input_exits_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"elements\": [\"a\"],\n \"closed\": []}").unwrap();
    let o = circgeo(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(circgeo(&["verify", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(circgeo(&["realize", "--class", "S99", "--seed", "1"]).status.code(), Some(2));
}

#[test]
fn class_table_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    assert_eq!(circgeo(&["class-table", "--out", out.to_str().unwrap()]).status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 38);
    let o = circgeo(&["sweep", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(circgeo(&["sweep", "--n", "5"]).status.code(), Some(2));
    assert_eq!(circgeo(&["counterexample"]).status.code(), Some(0));
}

#[test]
fn dismissed_class_is_not_realized() {
    let o = circgeo(&["realize", "--class", "S2", "--seed", "1", "--budget", "5000"]);
    assert_eq!(o.status.code(), Some(1));
}
