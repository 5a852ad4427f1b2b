use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn npk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_npk")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    fixture("data", name).to_string_lossy().into_owned()
}

fn fixture(dir: &str, name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", dir, name].iter().collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json_out(args: &[&str]) -> Value {
    let out = npk(args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).expect("json")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("npk-cli-{}-{name}", std::process::id()))
}

const KITE: [&str; 4] = ["--fx", "1/(t*(t-1))", "--fy", "(t^2-5*t+2)/t"];

#[test]
fn polygon_json_for_kite_curve() {
    let v = json_out(&[&["polygon"], &KITE[..], &["--json"]].concat());
    assert_eq!(v, json!({"vertices": [[0, 0], [2, 0], [2, 1], [1, 2]], "degree": 1}));
    assert_eq!(
        stdout(&npk(&[&["polygon"], &KITE[..], &["--json"]].concat())),
        "{\"vertices\":[[0,0],[2,0],[2,1],[1,2]],\"degree\":1}\n"
    );
}

#[test]
fn every_polygon_method_agrees() {
    for m in ["orders", "resultant", "symbolic"] {
        let v = json_out(&[&["polygon", "--verify", "--method", m], &KITE[..], &["--json"]].concat());
        assert_eq!(v["vertices"], json!([[0, 0], [2, 0], [2, 1], [1, 2]]), "{m}");
    }
}

#[test]
fn verify_reports_degree_two() {
    let v = json_out(&["verify", "--fx", "t^2+1", "--fy", "t^2+1", "--json"]);
    assert_eq!(v["verified"], json!(true));
    assert_eq!(v["degree"], json!(2));
    assert_eq!(v["pushforward"], json!([[2, 0], [0, 2]]));
    assert_eq!(v["curve"], json!([[1, 0], [0, 1]]));
    let text = npk(&["verify", "--fx", "t^2+1", "--fy", "t^2+1"]);
    assert_eq!(code(&text), 0);
    assert!(stdout(&text).contains("deg rho: 2"));
}

#[test]
fn implicitize_reports_reduced_equation() {
    let v = json_out(&["implicitize", "--fx", "t^2", "--fy", "t^4+t^2", "--json"]);
    assert_eq!(v["degree"], json!(2));
    let out = npk(&["implicitize", "--fx", "t", "--fy", "t^2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("degree: 1"));
}

#[test]
fn identity_holds_in_every_direction() {
    for sigma in ["1,-1", "-3,2", "5,7", "-1,-1"] {
        let v = json_out(&[&["identity", "--sigma", sigma], &KITE[..], &["--json"]].concat());
        assert_eq!(v["holds"], json!(true), "{sigma}");
        assert_eq!(v["rhs"], json!(v["lhs"].to_string()), "{sigma}");
    }
    assert_eq!(code(&npk(&[&["identity", "--sigma", "0,1"], &KITE[..]].concat())), 3);
}

#[test]
fn realizable_kite() {
    let v = json_out(&["realizable", "--polygon", &data("kite.json")]);
    assert_eq!(v, json!({"as_curve": true, "by_laurent": false, "by_polynomials": false, "dim_MQ": 4, "content": 1}));
}

#[test]
fn realizable_triangle_and_segment() {
    let v = json_out(&["realizable", "--polygon", &data("triangle.json")]);
    assert_eq!(v["by_polynomials"], json!(true));
    assert_eq!(v["content"], json!(2));
    let s = json_out(&["realizable", "--polygon", &data("segment.json")]);
    assert_eq!(s["as_curve"], json!(false));
    assert_eq!(s["by_laurent"], Value::Null);
    assert_eq!(s["direction"], json!([1, 2]));
}

fn anchored(vertices: &Value) -> Vec<(i64, i64)> {
    let pts: Vec<(i64, i64)> =
        vertices.as_array().unwrap().iter().map(|v| (v[0].as_i64().unwrap(), v[1].as_i64().unwrap())).collect();
    let mx = pts.iter().map(|p| p.0).min().unwrap();
    let my = pts.iter().map(|p| p.1).min().unwrap();
    let mut out: Vec<_> = pts.iter().map(|&(m, n)| (m - mx, n - my)).collect();
    out.sort();
    out
}

#[test]
fn synthesize_is_deterministic_and_round_trips() {
    for (file, strategy) in
        [("triangle.json", "polynomial"), ("square_unsorted.json", "laurent"), ("heptagon.json", "generic")]
    {
        let args = ["synthesize", "--polygon", &data(file), "--seed", "11", "--strategy", strategy, "--json"];
        let a = json_out(&args);
        assert_eq!(a, json_out(&args), "{file}");
        let fx = a["fx"].as_str().unwrap();
        let fy = a["fy"].as_str().unwrap();
        let p = json_out(&["verify", "--fx", fx, "--fy", fy, "--json"]);
        assert_eq!(p["degree"], json!(1), "{file}");
        let q: Value = serde_json::from_str(&fs::read_to_string(fixture("data", file)).unwrap()).unwrap();
        assert_eq!(anchored(&p["pushforward"]), anchored(&q["vertices"]), "{file}");
    }
}

#[test]
fn methods_lists_the_registry() {
    let out = stdout(&npk(&["methods"]));
    for name in ["orders", "resultant", "symbolic", "generic", "polynomial", "laurent"] {
        assert!(out.contains(name), "{name}");
    }
}

#[test]
fn parse_and_usage_errors_exit_two() {
    for args in [
        vec!["polygon", "--fx", "t+", "--fy", "t"],
        vec!["polygon", "--fx", "t", "--fy", "(t"],
        vec!["polygon", "--fx", "t", "--fy", "t", "--method", "bogus"],
        vec!["identity", "--fx", "t", "--fy", "t^2", "--sigma", "1"],
        vec!["realizable", "--polygon", "/nonexistent/q.json"],
        vec!["bogus"],
    ] {
        assert_eq!(code(&npk(&args)), 2, "{args:?}");
    }
    assert_eq!(code(&npk(&["realizable", "--polygon", &data("broken.json")])), 2);
    assert_eq!(code(&npk(&["synthesize", "--polygon", &data("kite.json"), "--strategy", "bogus"])), 2);
    let err = String::from_utf8(npk(&["polygon", "--fx", "t+", "--fy", "t"]).stderr).unwrap();
    assert!(err.contains("--fx"), "{err}");
}

#[test]
fn degenerate_inputs_exit_three() {
    assert_eq!(code(&npk(&["polygon", "--fx", "3", "--fy", "1/2"])), 3);
    assert_eq!(code(&npk(&["polygon", "--fx", "t/0", "--fy", "t"])), 3);
    assert_eq!(code(&npk(&["polygon", "--fx", "t-t", "--fy", "t"])), 3);
    assert_eq!(code(&npk(&["realizable", "--polygon", &data("point.json")])), 3);
    assert_eq!(code(&npk(&["synthesize", "--polygon", &data("kite.json"), "--strategy", "polynomial"])), 3);
}

fn check_golden(name: &str, args: &[&str]) {
    let path = scratch(name);
    let out = npk(&[args, &["--svg", path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let first = fs::read_to_string(&path).unwrap();
    assert_eq!(code(&npk(&[args, &["--svg", path.to_str().unwrap()]].concat())), 0);
    let second = fs::read_to_string(&path).unwrap();
    let _ = fs::remove_file(&path);
    assert_eq!(first, second, "{name}");
    assert_eq!(first, fs::read_to_string(fixture("golden", name)).unwrap(), "{name}");
}

#[test]
fn svg_matches_golden_files() {
    check_golden("kite_curve_family.svg", &[&["plot"], &KITE[..]].concat());
    check_golden("point.svg", &["plot", "--polygon", &data("point.json")]);
    check_golden("heptagon.svg", &["plot", "--polygon", &data("heptagon.json")]);
    check_golden("segment.svg", &["plot", "--polygon", &data("segment.json")]);
}

#[test]
fn plot_needs_a_source() {
    assert_eq!(code(&npk(&["plot", "--svg", scratch("none.svg").to_str().unwrap()])), 2);
}
