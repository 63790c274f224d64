use std::fs;
use std::process::{Command, Output};

use srgbound::sweep::WORKERS_ENV;

fn srgbound(args: &[&str]) -> Output {
    srgbound_with(args, &[])
}

fn srgbound_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_srgbound"));
    cmd.args(args).env_remove(WORKERS_ENV);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = srgbound(args);
    assert!(o.status.success(), "{args:?} failed: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn feasible_lists_small_tuples() {
    let out = ok(&["feasible", "--vmax", "16", "--level", "absolute"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "v,k,lambda,mu");
    for t in ["5,2,0,1", "9,4,1,2", "10,3,0,1", "16,5,0,2", "16,6,2,2"] {
        assert!(lines.contains(&t), "missing {t}");
    }
    assert!(!lines.contains(&"4,1,0,0"));
    let all = ok(&["feasible", "--vmax", "4", "--level", "basic", "--all"]);
    assert_eq!(all, "v,k,lambda,mu\n4,1,0,0\n4,2,0,2\n");
}

#[test]
fn bounds_csv_and_json() {
    let csv = ok(&["bounds", "--params", "41,20,9,10", "--d", "1"]);
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let field = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(field("rab_up"), "7");
    assert_eq!(field("div_up"), "6");

    let json = ok(&["bounds", "--params", "(16,6,2,2)", "--d", "4", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["haem_upper_clamped"], 12);
    assert_eq!(value["haem_lower_clamped"], 8);
}

#[test]
fn bounds_rejects_bad_params() {
    let o = srgbound(&["bounds", "--params", "10,4,1", "--d", "0"]);
    assert!(!o.status.success());
}

#[test]
fn sweep_is_independent_of_worker_count() {
    let args = ["sweep", "--vmax", "60", "--level", "krein"];
    let one = srgbound_with(&args, &[(WORKERS_ENV, "1")]);
    let three = srgbound_with(&args, &[(WORKERS_ENV, "3")]);
    assert!(one.status.success() && three.status.success());
    assert!(stdout(&one).lines().count() > 100);
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn zero_workers_is_an_error() {
    let o = srgbound_with(&["sweep", "--vmax", "20"], &[(WORKERS_ENV, "0")]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn sweep_from_tuple_file_with_summary() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tuples.csv");
    let output = dir.path().join("rows.csv");
    fs::write(&input, "v,k,lambda,mu\n10,3,0,1\n41,20,9,10\n10,4,1,2\n10,3,0,1\n").unwrap();
    let o = srgbound(&[
        "sweep",
        "--tuples",
        input.to_str().unwrap(),
        "--out",
        output.to_str().unwrap(),
        "--summary",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("rejected (10,4,1,2)"));
    let summary = stdout(&o);
    assert!(summary.starts_with("tuples: 2\n"), "{summary}");
    assert!(summary.contains("upper: rab_up < haem_up - 1"));
    let rows = fs::read_to_string(&output).unwrap();
    // header plus (k + 1) rows per tuple
    assert_eq!(rows.lines().count(), 1 + 4 + 21);

    let again = dir.path().join("again.csv");
    let o = srgbound(&[
        "sweep",
        "--vmax",
        "41",
        "--level",
        "basic",
        "--out",
        again.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let full = fs::read_to_string(&again).unwrap();
    for line in rows.lines() {
        assert!(full.lines().any(|l| l == line), "row {line} missing from full sweep");
    }
}

#[test]
fn malformed_tuple_file_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    fs::write(&input, "v,k,lambda,mu\n10,3,zero,1\n").unwrap();
    let o = srgbound(&["sweep", "--tuples", input.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains(":2: malformed row"), "{}", stderr(&o));
    fs::write(&input, "v,k,lambda\n10,3,0\n").unwrap();
    let o = srgbound(&["sweep", "--tuples", input.to_str().unwrap()]);
    assert!(!o.status.success());
}

#[test]
fn sweep_needs_a_source() {
    let o = srgbound(&["sweep"]);
    assert!(!o.status.success());
}

#[test]
fn oracle_on_petersen() {
    let out = ok(&["oracle", "--graph", "builtin:petersen", "--d", "0"]);
    assert!(out.contains("(10,3,0,1)"));
    assert!(out.contains("min order 1, max order 4"));
    assert!(out.contains("within rab bounds: true"));
    let o = srgbound(&["oracle", "--graph", "builtin:nonesuch", "--d", "0"]);
    assert!(!o.status.success());
}

#[test]
fn oracle_reads_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.g6");
    fs::write(&path, "Dhc\n").unwrap();
    let arg = format!("g6:{}", path.display());
    let out = ok(&["oracle", "--graph", &arg, "--d", "2"]);
    assert!(out.contains("(5,2,0,1)"));
    assert!(out.contains("min order 5, max order 5"));
}

#[test]
fn witness_paley() {
    let out = ok(&["witness", "--family", "paley", "--d", "0", "--max-q", "40"]);
    let holding: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| l.contains(",holds,true"))
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(holding, ["17", "37"]);
}

#[test]
fn cab_reports_all_three_bounds() {
    let out = ok(&["cab", "--params", "10,3,0"]);
    assert!(out.contains("cab: 2"), "{out}");
    assert!(out.contains("spectral root"));
    assert!(out.contains("delsarte ((10,3,0,1)): 2"));
    let o = srgbound(&["cab", "--params", "10,3"]);
    assert!(!o.status.success());
}

#[test]
fn identities_small_run() {
    let out = ok(&["identities", "--vmax", "20"]);
    assert!(out.lines().count() > 5);
    assert!(!out.contains("FAILED"));
}
