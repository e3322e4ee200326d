use std::fs;
use std::process::{Command, Output};

fn coverlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverlab"))
        .args(args)
        .env_remove("COVERLAB_MAX_PRODUCTS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_p5() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(
        &dir,
        "p5.json",
        r#"{"vertices": ["x1","x2","x3","x4","x5"],
            "edges": [["x1","x2"],["x2","x3"],["x3","x4"],["x4","x5"]]}"#,
    );
    let out = coverlab(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut gens: Vec<&str> = json["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    gens.sort();
    assert_eq!(gens, ["x1*x3*x4", "x1*x3*x5", "x2*x3*x5", "x2*x4"]);
    assert!(json["quasi_witness"].is_null());
    assert_eq!(json["fiber"]["status"], "not_quasi_equigenerated");
}

#[test]
fn family_circulant_pipes_into_analyze() {
    let out = coverlab(&["family", "circulant", "--n", "6", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(&dir, "c6.json", &stdout(&out));
    let report = coverlab(&["analyze", &file, "--format", "json"]);
    assert_eq!(report.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&report)).unwrap();
    assert_eq!(json["fiber"]["report"]["freiman"], true);

    let inline = coverlab(&["family", "circulant", "--n", "6", "--s", "2", "--analyze"]);
    assert_eq!(stdout(&inline), stdout(&report));
}

#[test]
fn edgeless_file_is_unit_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(
        &dir,
        "e.json",
        r#"{"vertices": ["a","b","c"], "edges": []}"#,
    );
    let out = coverlab(&["analyze", &file, "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("equigenerated: true"), "{text}");
    assert!(text.contains("\n  1\n"), "{text}");
}

#[test]
fn family_kinds() {
    let out = coverlab(&["family", "whisker", "--base", "cycle:3"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(json["edges"].as_array().unwrap().len(), 6);

    let out = coverlab(&[
        "family",
        "two-cliques",
        "--n",
        "3",
        "--m",
        "3",
        "--analyze",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("t=5 l=4 a=1 mu2=14 b=1 freiman=true"));

    let out = coverlab(&["family", "h-family", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = coverlab(&[
        "family",
        "join",
        "--base",
        "complete:2",
        "--other",
        "complete:2",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["edges"].as_array().unwrap().len(), 6);
    let out = coverlab(&["family", "banded-path", "--n", "7", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(
        &dir,
        "bad.json",
        "{\"vertices\": [\"a\"],\n \"edges\": [[\"a\", \"z\"]]}",
    );
    let out = coverlab(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('z'));

    let extra = write_temp(
        &dir,
        "extra.json",
        "{\"vertices\": [],\n\"edges\": [], \"colour\": 1}",
    );
    let out = coverlab(&["analyze", &extra]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(
        coverlab(&["family", "circulant", "--n", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        coverlab(&["family", "circulant", "--n", "6", "--s", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(coverlab(&["sweep", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        coverlab(&["analyze", "/nonexistent/graph.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn capacity_override_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_coverlab"))
        .args(["family", "two-cliques", "--n", "4", "--m", "5", "--analyze"])
        .env("COVERLAB_MAX_PRODUCTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
}

#[test]
fn sweep_csv_columns_and_flags() {
    let out = coverlab(&["sweep", "quasicirculant", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check,instance,params,computed,expected,theorem,status,discrepancy,note"
    );
    let c5 = text.lines().find(|l| l.contains("C5(1..1)")).unwrap();
    assert!(c5.contains(",true,true,") && c5.contains("flagged"), "{c5}");
}

#[test]
fn sweeps_are_deterministic_and_match() {
    for check in ["equipath", "two-cliques", "trees", "circ-freiman"] {
        let a = coverlab(&["sweep", check, "--format", "text"]);
        let b = coverlab(&["sweep", check, "--format", "text"]);
        assert_eq!(a.status.code(), Some(0), "{check}");
        assert_eq!(a.stdout, b.stdout);
        assert!(stdout(&a).contains(" 0 mismatch"));
    }
}
