use std::process::{Command, Output};

fn vpq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_prints_the_normal_form() {
    let o = vpq(&["normalize", "L(0) T"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(q/p)*T L(0)\n");
    let o = vpq(&["normalize", "T Tinv + Tinv T", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"1\":\"2\"}\n");
}

#[test]
fn normalize_rejects_bad_input_with_usage_status() {
    let o = vpq(&["normalize", "L(0) + y"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("column 8") && err.contains("unknown symbol 'y'"),
        "{err}"
    );
    assert_eq!(vpq(&["normalize", "C^-2"]).status.code(), Some(2));
    assert_eq!(vpq(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn brackets() {
    let o = vpq(&["bracket", "1", "-1"]);
    assert_eq!(stdout(&o), "-((p + q)/(p*q))*L(0)\n");
    let o = vpq(&["bracket", "-1", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], -1);
    assert_eq!(v["coeff_L"], "(p + q)/(p*q)");
    assert_eq!(v["coeff_C"], "0");
}

#[test]
fn verify_fock_is_deterministic_and_passes() {
    let a = vpq(&["verify", "fock", "--range", "2", "--dim", "12"]);
    assert_eq!(a.status.code(), Some(0));
    let b = vpq(&["verify", "fock", "--range", "2", "--dim", "12"]);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    assert!(lines
        .iter()
        .all(|r| r["status"] == "ok" && r["suite"] == "fock"));
}

#[test]
fn verify_fock_reports_guard_violations() {
    let o = vpq(&["verify", "fock", "--range", "2", "--dim", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hopf_failures_gate_the_exit_status() {
    let o = vpq(&["verify", "hopf", "--range", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"status\":\"fail\""));
    let o = vpq(&["verify", "hopf", "--range", "1", "--strict-typos"]);
    assert_eq!(o.status.code(), Some(0));
    let o = vpq(&[
        "verify",
        "hopf",
        "--range",
        "1",
        "--strict-typos",
        "--gate-typos",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = vpq(&["verify", "homlie", "--range", "1", "--variant", "r5-8.11"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn confluence_reports_its_seed() {
    let o = vpq(&["verify", "confluence", "--samples", "10", "--seed", "7"]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["seed"], 7);
    }
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sc.tex");
    let o = vpq(&[
        "table",
        "structure-constants",
        "--range",
        "1",
        "--format",
        "latex",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let tex = std::fs::read_to_string(&path).unwrap();
    assert!(tex.starts_with("\\begin{align*}"));
    assert_eq!(tex.matches("&=").count(), 9);
}

#[test]
fn fock_dumps() {
    let o = vpq(&["fock", "l", "0", "--dim", "3", "--mode", "classical"]);
    assert_eq!(stdout(&o), "0,0,0\n0,1,0\n0,0,2\n");
    let o = vpq(&[
        "fock", "bracket", "2", "-1", "--dim", "10", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 0);
    assert_eq!(
        vpq(&["fock", "l", "-2", "--dim", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(vpq(&["fock", "bracket", "1"]).status.code(), Some(2));
}
