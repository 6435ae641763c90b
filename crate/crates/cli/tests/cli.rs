use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibercount"))
        .args(args)
        .env_remove("LG_JOBS")
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_ci_exit_codes() {
    let ok = run(&["verify-ci", "--spec", "4;4"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("r = 4") && text.contains("h0 = 5"), "{text}");

    assert_eq!(run(&["verify-ci", "--spec", "4;5"]).status.code(), Some(2));
    assert_eq!(run(&["verify-ci", "--spec", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify-ci"]).status.code(), Some(2));
}

#[test]
fn verify_ci_json() {
    let o = run(&["--format", "json", "verify-ci", "--spec", "5;2,2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["values"]["r"], 18);
    assert_eq!(v["values"]["h0"], 19);
    assert_eq!(v["status"], "PASS");
}

#[test]
fn dual_of_p2() {
    let o = run(&["dual", fixture("polytopes/p2_fan.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "conv{(-1,-1),(-1,2),(2,-1)}");
}

#[test]
fn dual_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"dim":2,"vertices":[[1,0],[0]]}"#).unwrap();
    assert_eq!(run(&["dual", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["dual", "/nonexistent.json"]).status.code(), Some(2));
    let o = run(&["--dim-cap", "1", "dual", fixture("polytopes/p2_fan.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn points_and_newton() {
    let p = fixture("polytopes/p3_fan.json");
    let all = run(&["points", p.to_str().unwrap()]);
    assert_eq!(stdout(&all).lines().count(), 5);
    let inner = run(&["points", p.to_str().unwrap(), "--interior"]);
    assert_eq!(stdout(&inner).trim(), "(0,0,0)");
    let o = run(&["--format", "json", "newton", fixture("p2_mirror.laurent").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"], serde_json::json!([[-1, -1], [0, 1], [1, 0]]));
}

#[test]
fn toric_reports() {
    let o = run(&["verify-toric", fixture("polytopes/p3_fan.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("components = 34"));
    let o = run(&["verify-toric", fixture("polytopes/p112_fan.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify-toric", "--fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn threefolds_table() {
    let o = run(&["threefolds"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().skip(1).all(|l| l.ends_with("PASS")));
    let one = run(&["threefolds", "--family", "9.1"]);
    assert!(stdout(&one).contains("9.1"));
    assert_eq!(run(&["threefolds", "--family", "7.7"]).status.code(), Some(2));
}

#[test]
fn threefolds_custom_cases() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cases.json");
    let mut cases = fibercount::ledger::builtin_cases();
    cases.truncate(2);
    cases[1].defects[1].defect = 2;
    std::fs::write(&path, fibercount::ledger::cases_to_json(&cases)).unwrap();
    let o = run(&["threefolds", "--cases", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn sweep_output_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let oa = run(&["sweep-ci", "--max-ambient", "5", "--jobs", "1", "--json", a.to_str().unwrap()]);
    let ob = run(&["sweep-ci", "--max-ambient", "5", "--jobs", "4", "--json", b.to_str().unwrap()]);
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(ob.status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(stdout(&oa), stdout(&ob));
    let text = stdout(&oa);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.ends_with("PASS")));
    assert_eq!(run(&["sweep-ci", "--max-ambient", "2"]).status.code(), Some(2));
    assert_eq!(run(&["sweep-ci", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn x66_check_prints_both_factors() {
    let o = run(&["x66-check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("a*b*c - a^2*c") && text.contains("a*b*c - a^3*c"), "{text}");
    assert!(text.contains("h0 - 1 = 2"));
}
