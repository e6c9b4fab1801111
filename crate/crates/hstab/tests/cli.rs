use std::path::Path;
use std::process::{Command, Output};

use hstab::format::{read_sequence, sequence_to_string};
use serde_json::{json, Value};

fn hstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("json on stderr")
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path = path.to_str().unwrap().to_string();
    let mut full = vec!["seq", "build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = hstab(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn quadratic_relation_product() {
    let out = hstab(&["hecke", "mult", "--n", "2", "--left", "1", "--right", "1"]);
    assert_eq!(stdout_json(&out), json!({"T_e": "q", "T_1": "q-1"}));
}

#[test]
fn words_with_commas_and_spaces() {
    let a = stdout_json(&hstab(&["hecke", "mult", "--n", "3", "--left", "1 2", "--right", "1"]));
    let b = stdout_json(&hstab(&["hecke", "mult", "--n", "3", "--left", "1,2,1", "--right", ""]));
    assert_eq!(a, b);
    assert_eq!(a, json!({"T_1,2,1": "1"}));
}

#[test]
fn specht_sequence_degrees_and_multiplicities() {
    let dir = tempfile::tempdir().unwrap();
    let file = build(
        dir.path(),
        "s1.json",
        &["--kind", "M-specht", "--lambda", "1", "--nmax", "6"],
    );
    let d = stdout_json(&hstab(&["seq", "degrees", "--in", &file, "--amax", "2"]));
    assert_eq!(d["schema"], "hecke-stab/1");
    assert_eq!(d["stability_degree"], 1);
    assert_eq!(d["injective_degree"], 0);

    let m = stdout_json(&hstab(&["seq", "multiplicities", "--in", &file]));
    let rows = m["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], json!({"lambda": "∅", "counts": [0, 1, 1, 1, 1, 1, 1]}));
    assert_eq!(rows[1], json!({"lambda": "1", "counts": [0, 0, 1, 1, 1, 1, 1]}));

    let csv = hstab(&["seq", "multiplicities", "--in", &file, "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("lambda,n=0,n=1,n=2,n=3,n=4,n=5,n=6\n"));

    let w = stdout_json(&hstab(&["seq", "weight", "--in", &file]));
    assert_eq!(w["weight"], 1);
}

#[test]
fn check_stable_reports_bound() {
    let dir = tempfile::tempdir().unwrap();
    let file = build(
        dir.path(),
        "s21.json",
        &["--kind", "M-specht", "--lambda", "2,1", "--nmax", "7"],
    );
    let v = stdout_json(&hstab(&["seq", "check-stable", "--in", &file]));
    assert_eq!(v["stable"], true);
    assert_eq!(v["predicted_bound"], 5);
    assert_eq!(v["within_bound"], true);
    assert!(v["onset"].as_u64().unwrap() <= 5);
}

#[test]
fn built_files_round_trip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let file = build(dir.path(), "m2.json", &["--kind", "Mm", "--m", "2", "--nmax", "4"]);
    let bytes = std::fs::read_to_string(&file).unwrap();
    let v = read_sequence(Path::new(&file)).unwrap();
    assert_eq!(v.dims(), vec![0, 0, 2, 6, 12]);
    assert_eq!(sequence_to_string(&v), bytes);
}

#[test]
fn identical_runs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = hstab(&[
            "seq",
            "noetherian",
            "--m",
            "2",
            "--trials",
            "5",
            "--seed",
            "9",
            "--nmax",
            "5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
    let a = build(dir.path(), "x.json", &["--kind", "Mm", "--m", "1", "--nmax", "5"]);
    let b = build(dir.path(), "y.json", &["--kind", "Mm", "--m", "1", "--nmax", "5"]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn shift_decompose_report() {
    let r = stdout_json(&hstab(&[
        "seq",
        "shift-decompose",
        "--m",
        "2",
        "--a",
        "1",
        "--nmax",
        "5",
    ]));
    assert_eq!(r["passed"], true);
    assert_eq!(r["complement_generation_degree"], 1);
}

#[test]
fn bad_input_exits_two_with_json() {
    for args in [
        vec!["hecke", "mult", "--n", "2", "--left", "2", "--right", "1"],
        vec!["seq", "build", "--kind", "M-specht", "--lambda", "1,2", "--nmax", "4"],
        vec!["seq", "build", "--kind", "Mm", "--nmax", "4"],
        vec!["seq", "build", "--kind", "Mm", "--m", "1", "--nmax", "0"],
        vec!["seq", "weight", "--in", "/nonexistent/file.json"],
        vec!["seq", "frobnicate"],
        vec![
            "--strict",
            "--mode",
            "specialized",
            "seq",
            "shift-decompose",
            "--m",
            "1",
            "--a",
            "1",
            "--nmax",
            "3",
        ],
        vec![
            "--format",
            "csv",
            "seq",
            "shift-decompose",
            "--m",
            "1",
            "--a",
            "1",
            "--nmax",
            "3",
        ],
    ] {
        let out = hstab(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = stderr_json(&out);
        assert!(err["error"].is_string() && err["message"].is_string(), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn tampered_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = build(dir.path(), "m1.json", &["--kind", "Mm", "--m", "1", "--nmax", "3"]);
    let mut f: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    // scale one connector entry so the square with the generators breaks
    f["connectors"][2]["entries"][0][2] = json!([["2"], ["1"]]);
    std::fs::write(&file, serde_json::to_string(&f).unwrap()).unwrap();
    let out = hstab(&["seq", "weight", "--in", &file]);
    assert_eq!(out.status.code(), Some(2));

    f["schema"] = json!("hecke-stab/0");
    std::fs::write(&file, serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(hstab(&["seq", "weight", "--in", &file]).status.code(), Some(2));
}

#[test]
fn specialized_mode_matches_exact() {
    let dir = tempfile::tempdir().unwrap();
    let file = build(
        dir.path(),
        "s2.json",
        &["--kind", "M-specht", "--lambda", "2", "--nmax", "6"],
    );
    let exact = stdout_json(&hstab(&["seq", "degrees", "--in", &file, "--amax", "2"]));
    let fast = stdout_json(&hstab(&[
        "--mode",
        "specialized",
        "--points",
        "3",
        "--rank-seed",
        "5",
        "seq",
        "degrees",
        "--in",
        &file,
        "--amax",
        "2",
    ]));
    assert_eq!(exact, fast);
}

#[test]
fn failing_verification_exits_one() {
    // a truncation too short to observe the stability onset of M(S^(3))
    let out = hstab(&["verify", "all", "--stable-nmax", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], false);
    assert_eq!(report["criteria"][6]["passed"], false);
    assert_eq!(stderr_json(&out)["error"], "verification");
}
