use std::process::{Command, Output};

use serde_json::Value;

fn kfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn theta_suite_report() {
    let out = kfock(&["run", "theta", "--max-size", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "theta");
    assert_eq!(v["totals"]["failed"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["totals"]["checks"], checks.len());
    assert!(checks
        .iter()
        .all(|c| !c["anchor"].as_str().unwrap().is_empty()));
    assert!(checks.iter().all(|c| c.get("elapsed_ms").is_none()));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["run", "all", "--max-size", "2", "--series-order", "4"];
    let (a, b) = (kfock(&args), kfock(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sampled_mode_records_the_seed() {
    let out = kfock(&[
        "run",
        "macdonald",
        "--max-size",
        "3",
        "--mode",
        "sampled",
        "--seed",
        "11",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["parameters"]["seed"], 11);
}

#[test]
fn text_format_and_timings() {
    let out = kfock(&[
        "shuffle",
        "wheel",
        "--format",
        "text",
        "--timings",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("wheel: 27/27 passed"));
    assert!(text.contains(" ms]"));
}

#[test]
fn e_matrix_block() {
    let out = kfock(&["dump", "e-matrix", "--r", "0", "--n", "2"]);
    assert!(out.status.success());
    let block = &json(&out)["block"];
    assert_eq!(block["cols"].as_array().unwrap().len(), 2);
    let rows = block["matrix"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 2));
    assert_eq!(rows[0][1], "0");
}

#[test]
fn normalization_and_macdonald_dumps() {
    let out = kfock(&["dump", "c-norms", "--max-size", "3"]);
    assert_eq!(json(&out)["values"]["[]"], "1");
    let out = kfock(&["dump", "macdonald", "--max-size", "2"]);
    let p11 = &json(&out)["polys"]["[1,1]"];
    assert_eq!(p11["basis"], "m");
    assert_eq!(p11["coeffs"].as_object().unwrap().len(), 1);
    assert_eq!(p11["coeffs"]["[1,1]"], "1");
}

#[test]
fn heisenberg_dump_writes_a_file() {
    let path = std::env::temp_dir().join(format!("kfock-h2-{}.json", std::process::id()));
    let out = kfock(&[
        "theta",
        "heisenberg",
        "--i",
        "2",
        "--max-size",
        "4",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["shift"], 2);
    let _ = std::fs::remove_file(path);
    let report = json(&out);
    assert_eq!(report["checks"][0]["note"], "scalar=1");
}

#[test]
fn bad_arguments_exit_nonzero() {
    assert_eq!(kfock(&["verify", "--relation", "9"]).status.code(), Some(2));
    assert_eq!(kfock(&["run", "nope"]).status.code(), Some(2));
    assert_eq!(
        kfock(&["run", "theta", "--max-size", "0"]).status.code(),
        Some(2)
    );
}
