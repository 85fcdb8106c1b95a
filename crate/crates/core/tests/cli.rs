use std::process::{Command, Output};

fn hbnk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbnk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_edge_list() {
    let o = hbnk(&["gen", "--n", "2", "--k", "1", "--format", "edgelist"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("{1} {1,2}"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn gen_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let o = hbnk(&[
        "gen",
        "--n",
        "4",
        "--k",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["vertex_count"], 40);
    assert_eq!(doc["edge_count"], 114);
}

#[test]
fn gen_is_byte_identical() {
    for format in ["edgelist", "dot", "json"] {
        let args = ["gen", "--n", "5", "--k", "3", "--format", format];
        let a = hbnk(&args);
        let b = hbnk(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn usage_errors() {
    assert_eq!(
        hbnk(&["gen", "--n", "1", "--k", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hbnk(&["gen", "--n", "3", "--k", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hbnk(&["gen", "--n", "0", "--k", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hbnk(&["gen", "--n", "14", "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hbnk(&["verify", "--n-min", "2", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hbnk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.txt");
    let o = hbnk(&[
        "gen",
        "--n",
        "2",
        "--k",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn invariants_table() {
    let o = hbnk(&["invariants", "--n", "4", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  size: formula 114, oracle 114, OK\n"));
    assert!(
        text.contains("  omega: definitional 148, published closed form -56, EXPECTED-DISCREPANCY\n")
    );
    assert!(text.ends_with("  overall: PASS\n"));
}

#[test]
fn invariants_json_excludes_timings_by_default() {
    let o = hbnk(&["invariants", "--n", "3", "--k", "2", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc.get("timings").is_none());
    let o = hbnk(&["invariants", "--n", "3", "--k", "2", "--json", "--timings"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["timings"].is_object());
}

#[test]
fn table1_matches() {
    let o = hbnk(&["table1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_single_point() {
    let o = hbnk(&["verify", "--n-min", "3", "--n-max", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let points = doc["points"].as_array().unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0]["params"], serde_json::json!({"n": 3, "k": 2}));
}

#[test]
fn verify_skips_large_points() {
    let o = hbnk(&[
        "verify",
        "--n-min",
        "7",
        "--n-max",
        "7",
        "--oracle-limit",
        "100",
    ]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("warning: H_B(7,2) skipped"));
    assert_eq!(stdout(&o).lines().count(), 5);
}
