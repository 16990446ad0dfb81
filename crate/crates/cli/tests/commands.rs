use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;
use walkweyl::enumerate::{walk_slice, Region};
use walkweyl::{Point, StepSet};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkweyl"))
        .args(args)
        .output()
        .expect("spawn walkweyl")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn count_examples() {
    let rk = [
        "count",
        "--model",
        "reverse-kreweras",
        "--from",
        "1,1",
        "--to",
        "1,1",
        "--t",
        "3",
        "--region",
        "qp",
    ];
    assert_eq!(stdout(&rk).trim(), "2");
    let k = [
        "count", "--model", "kreweras", "--from", "0,0", "--to", "0,0", "--t", "0", "--region",
        "free",
    ];
    assert_eq!(stdout(&k).trim(), "1");
    let g = [
        "count", "--model", "gessel", "--from", "0,0", "--to", "0,0", "--t", "2", "--region",
        "free",
    ];
    assert_eq!(stdout(&g).trim(), "4");
}

#[test]
fn custom_steps() {
    let out = stdout(&[
        "count",
        "--steps-set",
        "1,0;-1,0;0,1;0,-1",
        "--from",
        "0,0",
        "--to",
        "0,0",
        "--t",
        "2",
    ]);
    assert_eq!(out.trim(), "4");
}

#[test]
fn mishna_rechnitzer_csv_row() {
    let csv = stdout(&[
        "slice",
        "--model",
        "mishna-rechnitzer",
        "--t",
        "8",
        "--format",
        "csv",
    ]);
    let row = csv
        .lines()
        .find(|l| l.starts_with("8,8,"))
        .expect("row for (8,8)");
    let steps = StepSet::by_name("mishna-rechnitzer").unwrap();
    let table = walk_slice(&steps, Point::new(0, 0), 8, &Region::Free);
    assert_eq!(row, format!("8,8,{}", table.get(Point::new(8, 8))));
    assert_eq!(csv, table.to_csv());
}

#[test]
fn simple_json_slice() {
    let v = json(&["slice", "--model", "simple", "--t", "0", "--format", "json"]);
    let counts = v["counts"].as_array().unwrap();
    assert_eq!(counts.len(), 1);
    assert_eq!(counts[0], serde_json::json!([0, 0, "1"]));
}

#[test]
fn kreweras_overlay_has_three_lines() {
    let svg = stdout(&[
        "slice",
        "--model",
        "kreweras",
        "--t",
        "6",
        "--format",
        "svg",
        "--overlay",
    ]);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"reflection\"").count(), 3);
    let plain = stdout(&[
        "slice", "--model", "kreweras", "--t", "6", "--format", "svg",
    ]);
    assert_eq!(plain.matches("class=\"reflection\"").count(), 0);
}

#[test]
fn gessel_orders() {
    let v = json(&[
        "group", "--model", "gessel", "--source", "paper", "--show", "orders",
    ]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["orders"], serde_json::json!({"1": 1, "2": 5, "4": 2}));
}

#[test]
fn kreweras_search_matrices() {
    let v = json(&[
        "group", "--model", "kreweras", "--source", "search", "--show", "matrices",
    ]);
    let got: BTreeSet<String> = v["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["element"].as_str().unwrap().to_string())
        .collect();
    let want: BTreeSet<String> = [
        "1,0;0,1",
        "-1,-1;0,1",
        "1,0;-1,-1",
        "-1,-1;1,0",
        "0,1;-1,-1",
        "0,1;1,0",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    assert_eq!(got, want);
}

#[test]
fn mishna_rechnitzer_lines_meet() {
    let v = json(&[
        "group",
        "--model",
        "mishna-rechnitzer",
        "--source",
        "paper",
        "--show",
        "lines",
        "--t",
        "10",
    ]);
    assert_eq!(v["lines"].as_array().unwrap().len(), 3);
    assert_eq!(v["meet"], "(10/3, 10/3)");
}

#[test]
fn gessel_eigenvector_angle() {
    let v = json(&[
        "group",
        "--model",
        "gessel",
        "--source",
        "paper",
        "--show",
        "eigenvectors",
    ]);
    let g3 = v["elements"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["label"] == "g3")
        .unwrap();
    assert_eq!(g3["oblique_angle"]["exact"], "arctan(2)");
    assert_eq!(g3["oblique_angle"]["approx"], "1.107149");
}

#[test]
fn table_format() {
    let out = stdout(&[
        "group",
        "--model",
        "reverse-kreweras",
        "--source",
        "paper",
        "--format",
        "table",
    ]);
    assert!(out.starts_with("order 6\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["group", "--model", "simple", "--source", "paper"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--model", "simple", "--from", "1", "--to", "0,0", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "count",
            "--steps-set",
            "1,0;;x",
            "--from",
            "0,0",
            "--to",
            "0,0",
            "--t",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--model", "nope", "--from", "0,0", "--to", "0,0", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("slice.csv");
    let out = run(&[
        "slice",
        "--model",
        "simple",
        "--t",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn orbit_positive_control() {
    let v = json(&[
        "orbit",
        "--model",
        "simple",
        "--source",
        "custom",
        "--generator",
        "-1,0;0,1",
        "--generator",
        "1,0;0,-1",
        "--a-range",
        "1,3",
        "--b-range",
        "1,3",
        "--t-max",
        "4",
    ]);
    assert_eq!(v["verdict"], "equal-on-range");
}

#[test]
fn verify_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for p in [&first, &second] {
        let out = run(&[
            "verify",
            "--suite",
            "paper-claims",
            "--t-max",
            "8",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    let chamber = |model: &str| {
        let m = v["models"]
            .as_array()
            .unwrap()
            .iter()
            .find(|m| m["model"] == model)
            .unwrap();
        m["groups"][0]["quarter_plane"].clone()
    };
    assert_eq!(
        chamber("reverse-kreweras")["chamber_count"],
        serde_json::json!({"finite": 1})
    );
    assert_eq!(
        chamber("kreweras")["chamber_count"],
        serde_json::json!({"finite": 2})
    );
    assert_eq!(
        chamber("gessel")["chamber_count"],
        serde_json::json!({"finite": 3})
    );
    assert_eq!(chamber("mishna-rechnitzer")["affine"], true);

    let small = dir.path().join("c.json");
    let out = run(&["verify", "--t-max", "2", "--out", small.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(&small).unwrap()).unwrap();
    assert_eq!(v["t_max"], 2);
}
