//! The `support-forge` binary end to end.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

const BIN: &str = env!("CARGO_BIN_EXE_support-forge");

fn flagship() -> Value {
    json!({"p": 2, "vars": [{"name": "x", "deg": 1}, {"name": "y", "deg": 1}], "f": ["x^2", "y^2"]})
}

fn write_task(dir: &Path, name: &str, task: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(task).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    match cache {
        Some(c) => cmd.env("SUPPORT_FORGE_CACHE", c),
        None => cmd.env_remove("SUPPORT_FORGE_CACHE"),
    };
    cmd.output().unwrap()
}

#[test]
fn realize_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let task = write_task(
        dir.path(),
        "t.json",
        &json!({"ring": flagship(), "params": {"D": 10, "e": 2}, "args": {"target": ["x1 + x2"]}}),
    );
    let out = run(&["realize", "--task", &task], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["command"], "realize");
    let checked = v["result"]["oracle_points_checked"].as_array().unwrap();
    assert_eq!(checked.len(), 8);
    assert!(checked.iter().all(|c| c["oracle"] == c["ideal_vanishes"]));
}

#[test]
fn invalid_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad_field = write_task(dir.path(), "a.json", &json!({"ring": flagship(), "bogus": 1}));
    let bad_poly = write_task(
        dir.path(),
        "b.json",
        &json!({"ring": {"p": 2, "vars": [{"name": "x", "deg": 1}], "f": ["x^2 + q"]}}),
    );
    let not_ci = write_task(
        dir.path(),
        "c.json",
        &json!({"ring": {"p": 2, "vars": [{"name": "x", "deg": 1}, {"name": "y", "deg": 1}], "f": ["x*y", "x^2"]}}),
    );
    let bad_prime = write_task(dir.path(), "d.json", &json!({"ring": {"p": 4, "vars": [{"name": "x", "deg": 1}], "f": ["x^2"]}}));
    for t in [&bad_field, &bad_poly, &not_ci, &bad_prime] {
        let out = run(&["check-ring", "--task", t], None);
        assert_eq!(out.status.code(), Some(3), "{t}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let missing = dir.path().join("missing.json");
    let out = run(&["check-ring", "--task", missing.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(3));
    let inhomogeneous = write_task(dir.path(), "e.json", &json!({"ring": flagship(), "args": {"target": ["x1 + x1^2"]}}));
    assert_eq!(run(&["realize", "--task", &inhomogeneous], None).status.code(), Some(3));
}

#[test]
fn check_ring_reports_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let task = write_task(dir.path(), "t.json", &json!({"ring": flagship()}));
    let out = run(&["check-ring", "--task", &task], None);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ring_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn emit_points_lists_rational_points() {
    let dir = tempfile::tempdir().unwrap();
    let task = write_task(
        dir.path(),
        "t.json",
        &json!({"ring": flagship(), "modules": {"M": {"gens": [{"deg": 0}], "relations": [["x + y"]]}},
                "params": {"D": 10}, "args": {"module": "M"}}),
    );
    let out = run(&["support", "--task", &task, "--emit-points", "2"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"points\""));
    let v: Value = serde_json::from_str(&text).unwrap();
    let mut found = Vec::new();
    collect_points(&v, &mut found);
    assert!(found.iter().any(|p| p == &json!({"1": [["1", "1"]], "2": [["1", "1"]]})), "{found:?}");
}

fn collect_points(v: &Value, out: &mut Vec<Value>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k == "points" {
                    out.push(x.clone());
                } else {
                    collect_points(x, out);
                }
            }
        }
        Value::Array(a) => a.iter().for_each(|x| collect_points(x, out)),
        _ => {}
    }
}

#[test]
fn cache_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let task = write_task(
        dir.path(),
        "t.json",
        &json!({"ring": flagship(), "params": {"D": 10}, "args": {"module": "k"}}),
    );
    let cold = dir.path().join("cold.json");
    let first = dir.path().join("first.json");
    let warm = dir.path().join("warm.json");
    let s = |p: &Path| p.to_str().unwrap().to_string();
    assert_eq!(run(&["support", "--task", &task, "--out", &s(&cold), "--no-cache"], None).status.code(), Some(0));
    assert_eq!(run(&["support", "--task", &task, "--out", &s(&first)], Some(&cache)).status.code(), Some(0));
    assert!(fs::read_dir(&cache).unwrap().count() > 0);
    assert_eq!(run(&["support", "--task", &task, "--out", &s(&warm)], Some(&cache)).status.code(), Some(0));
    let cold = fs::read(cold).unwrap();
    assert_eq!(cold, fs::read(first).unwrap());
    assert_eq!(cold, fs::read(warm).unwrap());
}

#[test]
fn resolve_and_ext() {
    let dir = tempfile::tempdir().unwrap();
    let task = write_task(dir.path(), "t.json", &json!({"ring": flagship(), "args": {"module": "k", "depth": 4}}));
    let out = run(&["resolve", "--task", &task], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["betti"], json!([1, 2, 3, 4, 5]));
    let out = run(&["ext", "--task", &task], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
