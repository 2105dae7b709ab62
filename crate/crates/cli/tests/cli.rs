use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-matroid")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn find<'a>(report: &'a Value, path: &[&str]) -> &'a Value {
    path.iter().fold(report, |node, name| {
        node["children"].as_array().and_then(|c| c.iter().find(|x| x["name"] == *name)).unwrap_or_else(|| panic!("no {name}"))
    })
}

#[test]
fn petersen_chromatic_coefficients() {
    let out = run(&["invariants", "named:petersen-graphic"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let chi = &find(&r, &["char-poly", "three-routes"])["witness"];
    let expected: Vec<i64> = vec![1, -15, 105, -455, 1353, -2861, 4275, -4305, 2606, -704];
    assert_eq!(chi, &serde_json::json!(expected));
}

#[test]
fn fano_chow_dims_and_m_sequence() {
    let out = run(&["chow", "named:fano"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(find(&r, &["build"])["witness"]["dims"], serde_json::json!([1, 8, 1]));
    assert_eq!(find(&r, &["m-sequence-triangle"])["witness"]["chow"], serde_json::json!([1, 6, 8]));
}

#[test]
fn hodge_check_uniform() {
    let out = run(&["hodge-check", "uniform:2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "pass");
    let out = run(&["hodge-check", "uniform:3,3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["children"].as_array().unwrap().len(), 2);
}

#[test]
fn hodge_check_with_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    // c(S) = |S| (3 - |S|) on {0,1,2}
    let values: serde_json::Map<String, Value> = (0u64..8)
        .map(|mask| {
            let s = mask.count_ones();
            (mask.to_string(), Value::String(format!("{}/1", s * (3 - s))))
        })
        .collect();
    std::fs::write(&path, Value::Object(values).to_string()).unwrap();
    let out = run(&["hodge-check", "uniform:3,3", "--witness", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // a modular function is rejected before any check runs
    std::fs::write(&path, r#"{"1": "1", "2": "1", "3": "2"}"#).unwrap();
    let out = run(&["hodge-check", "uniform:2,2", "--witness", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fan_writes_geometry_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fan.json");
    let out = run(&["fan", "uniform:2,3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["report"]["status"], "pass");
    let mut rays: Vec<Vec<i64>> = doc["fan"]["cones"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["rays"].as_array().unwrap().len() == 1)
        .map(|c| serde_json::from_value(c["rays"][0].clone()).unwrap())
        .collect();
    rays.sort();
    assert_eq!(rays, vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
}

#[test]
fn verify_all_filter_runs_only_matching_entries() {
    let out = run(&["verify-all", "--filter", "vamos"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let names: Vec<&str> = r["children"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["vamos", "vamos.dual", "vamos.del0", "vamos.con0"]);
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["verify-all", "--filter", "K4"]);
    let b = run(&["verify-all", "--filter", "K4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut threads = Command::new(env!("CARGO_BIN_EXE_hodge-matroid"));
    threads.args(["verify-all", "--filter", "K4"]).env("HODGE_MATROID_THREADS", "2");
    assert_eq!(threads.output().unwrap().stdout, a.stdout);
}

#[test]
fn corrupted_descriptor_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"type\": \"uniform\",\n  \"rank\": 2,\n  \"size\": 3,,\n}").unwrap();
    let out = run(&["invariants", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4, column 13"), "{err}");
}

#[test]
fn graph_file_and_descriptor_file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("triangle.json");
    std::fs::write(&g, r#"{"vertices": 3, "edges": [[0, 1], [0, 2], [1, 2]]}"#).unwrap();
    let out = run(&["chow", &format!("graph:@{}", g.display())]);
    assert_eq!(out.status.code(), Some(0));
    let d = dir.path().join("m.json");
    std::fs::write(&d, r#"{"type": "bases", "size": 4, "bases": [[0, 1], [2, 3]]}"#).unwrap();
    let out = run(&["invariants", d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "exchange failure is an input error");
    assert!(Path::new(&d).exists());
}

#[test]
fn pretty_output_is_a_table() {
    let out = run(&["chow", "named:fano", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pairing-full-rank"));
    assert!(text.contains("0 failed"));
}

#[test]
fn unknown_inputs_exit_with_two() {
    assert_eq!(run(&["invariants", "named:nonesuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify-all", "--filter", "no-such-entry"]).status.code(), Some(2));
}
