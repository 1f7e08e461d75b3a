use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn corrcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corrcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn close(v: &Value, expected: f64, tol: f64) -> bool {
    (v.as_f64().unwrap() - expected).abs() <= tol
}

#[test]
fn measure_classical_bits() {
    let r = json(&corrcoh(&["measure", "--family", "classical_bits"]));
    assert_eq!(r["coherence"]["l1"], 0.0);
    let mi = r["mutual_information"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["partition"] == "A|BC")
        .unwrap();
    assert!(close(&mi["value"], 1.0, 1e-10));
    assert!(close(&r["tripartite"]["interaction_information"], -1.0, 1e-9));
}

#[test]
fn measure_phi_monogamy_gap() {
    let r = json(&corrcoh(&["measure", "--family", "phi_pe", "--params", "1.0,0.5"]));
    let pivot_a = &r["tripartite"]["monogamy_gap"][0];
    assert_eq!(pivot_a["partition"], "A");
    assert!(close(&pivot_a["value"]["l1"], 1.0, 1e-9));
}

#[test]
fn measure_maximally_mixed_file_and_dump_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("mixed.json");
    let q = [0.25, 0.0];
    let z = [0.0, 0.0];
    let rows: Vec<Vec<[f64; 2]>> = (0..4).map(|i| (0..4).map(|j| if i == j { q } else { z }).collect()).collect();
    fs::write(&file, serde_json::json!({ "dims": [2, 2], "matrix": rows }).to_string()).unwrap();
    let r = json(&corrcoh(&["measure", "--state-file", file.to_str().unwrap()]));
    for k in ["l1", "re"] {
        assert_eq!(r["coherence"][k], 0.0);
    }
    assert!(close(&r["coherence"]["ire"], 0.0, 1e-12));
    assert!(close(&r["mutual_information"][0]["value"], 0.0, 1e-12));

    // a dumped state parses back to the same matrix
    let dump = dir.path().join("dump.json");
    let r = json(&corrcoh(&[
        "measure",
        "--family",
        "acin_four",
        "--params",
        "0.5,0,-0.5,0,0.5,0,0,0.5",
        "--dump-state",
        dump.to_str().unwrap(),
    ]));
    assert_eq!(r["dims"], serde_json::json!([2, 2, 2]));
    let again = json(&corrcoh(&["measure", "--state-file", dump.to_str().unwrap()]));
    assert_eq!(again["coherence"], r["coherence"]);
    assert_eq!(again["correlated_coherence"], r["correlated_coherence"]);
}

#[test]
fn measure_rejects_bad_sources() {
    assert!(!corrcoh(&["measure"]).status.success());
    assert!(!corrcoh(&["measure", "--family", "nope"]).status.success());
    assert!(!corrcoh(&["measure", "--family", "phi_pe", "--params", "2,0.5"]).status.success());

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    fs::write(&file, r#"{"dims":[2],"matrix":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}"#).unwrap();
    let out = corrcoh(&["measure", "--state-file", file.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("positivity"), "{err}");
}

#[test]
fn sweep_phi_grid() {
    let out = corrcoh(&["sweep", "--family", "phi_pe"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,epsilon,M"));
    let rows: Vec<[f64; 3]> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect();
    assert_eq!(rows.len(), 101 * 101);
    // p is the outer loop
    assert_eq!(rows[1][0], 0.0);
    assert_eq!(rows[101][0], 0.01);
    for [p, e, m] in &rows {
        assert!((m - 2.0 * p * (e * (1.0 - e)).sqrt()).abs() <= 1e-9, "({p},{e}) {m}");
        if *e == 0.0 || *e == 1.0 {
            assert!(m.abs() <= 1e-9);
        }
    }
    let peak = rows.iter().find(|r| r[0] == 1.0 && r[1] == 0.5).unwrap();
    assert!((peak[2] - 1.0).abs() <= 1e-9);
}

#[test]
fn sweep_psi_is_nonnegative_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for f in [&a, &b] {
        let out = corrcoh(&["sweep", "--family", "psi_pe", "--grid-steps", "41", "--out", f.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let min = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .fold(f64::INFINITY, f64::min);
    assert!(min >= -1e-9);
}

#[test]
fn sweep_rejects_other_families() {
    let out = corrcoh(&["sweep", "--family", "ghzw"]);
    assert!(!out.status.success());
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = corrcoh(&["verify", "--samples", "10", "--seed", "3", "--grid-steps", "11"]);
    let b = corrcoh(&["verify", "--samples", "10", "--seed", "3", "--grid-steps", "11"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).contains("FAIL"));
}

#[test]
fn verify_fails_on_corrupt_state_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("trace2.json");
    fs::write(&file, r#"{"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#).unwrap();
    let out = corrcoh(&[
        "verify",
        "--samples",
        "5",
        "--grid-steps",
        "5",
        "--state-file",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let table = stdout(&out);
    let bad: Vec<&str> = table.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(bad.len(), 1, "{table}");
    assert!(bad[0].contains("trace"), "{table}");
}

#[test]
fn verify_user_family_and_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = corrcoh(&[
        "verify",
        "--samples",
        "5",
        "--grid-steps",
        "5",
        "--family",
        "x_interpolation",
        "--params",
        "0.6,1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let report: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["relation"].as_str().unwrap().starts_with("x_interpolation(0.6,1)")));
    assert!(rows.iter().all(|r| r["passed"] == true));
}

#[test]
fn search_summaries() {
    let r = json(&corrcoh(&["search", "--dims", "2,2,2", "--samples", "1000", "--seed", "7"]));
    assert_eq!(r["samples"], 1000);
    assert_eq!(r["violations"], 0);
    assert!(r["min_gap"].as_f64().unwrap() >= -1e-9);
    assert!(r["argmin_seed"].is_u64());

    let r = json(&corrcoh(&["search", "--dims", "3,3,3", "--samples", "100"]));
    assert_eq!(r["dims"], serde_json::json!([3, 3, 3]));

    // mixed searches record violations but still exit 0
    let r = json(&corrcoh(&["search", "--samples", "50", "--mixed"]));
    assert_eq!(r["pure"], false);
}

#[test]
fn search_usage_errors() {
    assert_eq!(corrcoh(&["search", "--samples", "0"]).status.code(), Some(2));
    assert!(!corrcoh(&["search", "--dims", "2,2"]).status.success());
    assert!(!corrcoh(&["search", "--dims", "2,x,2"]).status.success());
}
