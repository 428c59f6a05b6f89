use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpl-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn re(v: &Value) -> f64 {
    v[0].as_f64().unwrap()
}

#[test]
fn eval_examples() {
    let out = run(&["eval", "--k", "2", "--z", "0.5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert!((re(&v["value"]) - 0.582_240_526_465_012_5).abs() < 1e-14);
    assert_eq!(v["method"], "series");

    let v = json(&run(&["eval", "--k", "1,1", "--z", "1,1", "--mode", "stuffle"]));
    assert!((re(&v["value"]) + PI * PI / 12.0).abs() < 1e-14);

    let v = json(&run(&["eval", "--k", "1", "--z", "0"]));
    assert_eq!(re(&v["value"]), 0.0);
}

#[test]
fn check_examples() {
    let out = run(&["check", "--theorem", "main", "--k", "2", "--z", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["records"][0]["residual"].as_f64().unwrap() < 1e-9);

    for b in ["+1", "-1"] {
        let out = run(&["check", "--theorem", "reg", "--k", "2", "--z", "-1", "--branch", b]);
        assert_eq!(out.status.code(), Some(0), "branch {b}");
    }

    let v = json(&run(&["check", "--theorem", "hirose", "--k", "2"]));
    let rec = &v["records"][0];
    assert!((re(&rec["lhs"]) + PI * PI / 3.0).abs() < 1e-12);
    assert!((re(&rec["rhs"]) + PI * PI / 3.0).abs() < 1e-12);
}

#[test]
fn domain_violation_is_structured() {
    let out = run(&["check", "--theorem", "main", "--k", "1,1", "--z", "-2,-0.5"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["error"]["violations"][0], serde_json::json!([1, 2]));
}

#[test]
fn bad_usage_exits_two() {
    assert_eq!(run(&["eval", "--k", "2,0", "--z", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--k", "2", "--z", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--theorem", "main", "--k", "2", "--z", "-2", "--mode", "shuffle"]).status.code(), Some(2));
}

#[test]
fn sweeps_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("run{i}.json"))).collect();
    for p in &paths {
        let out = run(&[
            "sweep", "--theorem", "main", "--depth-max", "2", "--weight-max", "3", "--points", "3",
            "--seed", "42", "--out", p.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["records"], 6 * 3);
    assert!(v["summary"]["max_residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(v["records"][0]["routes"]["independent"], true);
}

#[test]
fn regularized_sweep_covers_both_branches() {
    let out = run(&["sweep", "--theorem", "reg", "--depth-max", "2", "--weight-max", "2", "--roots", "2", "--tol", "1e-7"]);
    assert!(out.status.success());
    let v = json(&out);
    // (1): 2 points, (2): 2 points, (1,1): 4 points; two modes, two branches
    assert_eq!(v["summary"]["records"], (2 + 2 + 4) * 2 * 2);
    assert!(v["summary"]["max_cross_branch"].as_f64().unwrap() < 1e-9);
}

#[test]
fn zeta_sweep_and_csv() {
    let out = run(&["sweep", "--theorem", "zeta", "--weight-max", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("point,theorem,mode,branch,k,z,"));
    assert_eq!(lines.count(), 10);
    assert!(!text.contains(",fail,"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"theorem": "main", "k": "2", "z": "-3+0.5i", "tol": 1e-10, "eval": {"panel_order": 40}}"#).unwrap();
    let out = run(&["check", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["tol"], 1e-10);

    std::fs::write(&cfg, r#"{"unknown": 1}"#).unwrap();
    assert_eq!(run(&["check", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn selftest_filter_and_negative_control() {
    let out = run(&["selftest", "--only", "wordalg"]);
    assert!(out.status.success());
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r["module"] == "wordalg"));

    let out = run(&["selftest", "--only", "regul", "--corrupt-zeta"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let r = &v["results"][0];
    assert_eq!(r["pass"], false);
    assert!(r["measure"]["witness"].as_str().unwrap().starts_with("T^"));
}
