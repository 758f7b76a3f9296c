//! End-to-end checks of the binary: flags, formats, exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_paircover"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_paircover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin written");
    let output = child.wait_with_output().expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn field_summary_and_rejection() {
    let (code, stdout, _) = run(&["field", "--order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "GF(4) p=2 m=2 modulus=x^2+x+1\n");

    let (code, _, stderr) = run(&["field", "--order", "6"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("NotPrimePower"), "{stderr}");
}

#[test]
fn field_tables_are_csv() {
    let (code, stdout, _) = run(&["field", "--order", "3", "--table"]);
    assert_eq!(code, 0);
    let want = "GF(3) p=3 m=1\nadd\n0,1,2\n1,2,0\n2,0,1\nmul\n0,0,0\n0,1,2\n0,2,1\n";
    assert_eq!(stdout, want);
}

#[test]
fn mols_exact_output() {
    let (code, stdout, _) = run(&["mols", "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2,3,1\n3,1,2\n1,2,3\n\n3,1,2\n2,3,1\n1,2,3\n");

    let (code, stdout, _) = run(&["mols", "--order", "3", "--verify"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("latin: pass\northogonal: pass\ndisjoint-lines: pass\n"));
}

#[test]
fn bibd_json_round_trips_through_check() {
    let (code, json, _) = run(&["bibd", "--q", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let (code, stdout, _) = run_with_stdin(&["bibd", "check"], &json);
    assert_eq!(code, 0, "{stdout}");
    assert_eq!(stdout, "check: pass v=16 b=20 r=5 t=4 lambda=1\n");
}

#[test]
fn bibd_text_round_trips_through_check() {
    let (code, blocks, _) = run(&["bibd", "--q", "3"]);
    assert_eq!(code, 0);
    let file = format!("9 3 1\n{blocks}");
    let (code, stdout, _) = run_with_stdin(&["bibd", "check", "-"], &file);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.starts_with("check: pass"));
}

#[test]
fn bibd_check_flags_flawed_design() {
    // Valid header, but one point short of a (9,3,1) system.
    let file = "9 3 1\n1,2,3\n4,5,6\n7,8,9\n";
    let (code, stdout, _) = run_with_stdin(&["bibd", "check"], file);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("check: fail"), "{stdout}");
}

#[test]
fn bibd_validate_verdict() {
    let (code, stdout, _) = run(&["bibd", "--q", "5", "--validate"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("validate: pass v=25 b=30 r=6 t=5 lambda=1\n"));
}

#[test]
fn bibd_requires_q_or_check() {
    let (code, _, stderr) = run(&["bibd"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--q"), "{stderr}");
}

#[test]
fn assign_formats() {
    let (code, table, _) = run(&["assign", "--proposals", "9", "--capacity", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "r1\t1\t2\t3");
    assert_eq!(lines[1], "r2\t\t\t\t4\t5\t6");

    let (code, csv, _) = run(&[
        "assign",
        "--proposals",
        "9",
        "--capacity",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("1,2,3\n4,5,6\n7,8,9\n"));
    assert_eq!(csv.lines().count(), 12);

    let (code, json, _) = run(&[
        "assign",
        "--proposals",
        "4",
        "--capacity",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        json,
        "{\"n\":4,\"k\":2,\"referees\":[[1,2],[3,4],[2,3],[1,3],[1,4],[2,4]]}\n"
    );
}

#[test]
fn assign_rejects_bad_instances_with_named_conditions() {
    let (code, _, stderr) = run(&["assign", "--proposals", "10", "--capacity", "5"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("NotDivisible"), "{stderr}");

    let (code, _, stderr) = run(&["assign", "--proposals", "9", "--capacity", "9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("OutOfRegime"), "{stderr}");

    let (code, _, stderr) = run(&["assign", "--proposals", "36", "--capacity", "6"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("NotPrimePower"), "{stderr}");
}

#[test]
fn assign_labels_affect_table_only() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("paircover-labels-{}.txt", std::process::id()));
    std::fs::write(&path, "alpha\nbravo\ncharlie\ndelta\n").expect("labels written");

    let path_str = path.to_str().expect("utf-8 path");
    let (code, table, _) = run(&[
        "assign",
        "--proposals",
        "4",
        "--capacity",
        "2",
        "--labels",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(table.starts_with("r1\talpha\tbravo\n"), "{table}");

    let (code, csv, _) = run(&[
        "assign",
        "--proposals",
        "4",
        "--capacity",
        "2",
        "--format",
        "csv",
        "--labels",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(
        csv.starts_with("1,2\n"),
        "labels must not leak into csv: {csv}"
    );

    let (code, _, stderr) = run(&[
        "assign",
        "--proposals",
        "9",
        "--capacity",
        "3",
        "--labels",
        path_str,
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("need exactly 9"), "{stderr}");

    std::fs::remove_file(&path).ok();
}

#[test]
fn bounds_single_report() {
    let (code, stdout, _) = run(&["bounds", "--proposals", "32", "--capacity", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("lower=18\n"), "{stdout}");
    assert!(stdout.contains("upper_new=20\n"), "{stdout}");
    assert!(stdout.contains("upper_prior=28\n"), "{stdout}");
    assert!(stdout.contains("recommended=bibd\n"), "{stdout}");
}

#[test]
fn bounds_grid_csv_shape() {
    let (code, stdout, _) = run(&["bounds", "--grid", "10"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,lower,upper_new,upper_prior,ratio_new,ratio_prior,recommended")
    );
    assert_eq!(lines.next(), Some("2,2,1,2,1,2,1,prior"));
    assert!(
        stdout.lines().any(|l| l == "4,2,6,6,6,1,1,bibd"),
        "{stdout}"
    );
    assert!(stdout.lines().any(|l| l.starts_with("9,3,12,")), "{stdout}");
}

#[test]
fn bounds_needs_arguments() {
    let (code, _, stderr) = run(&["bounds"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--grid"), "{stderr}");
}

#[test]
fn oracle_exact_and_exhausted() {
    let (code, stdout, _) = run(&["oracle", "--proposals", "7", "--capacity", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("minimum=7\n"), "{stdout}");
    assert_eq!(stdout.lines().count(), 8);

    let (code, stdout, _) = run(&[
        "oracle",
        "--proposals",
        "9",
        "--capacity",
        "3",
        "--node-limit",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(
        stdout.starts_with("exhausted=node-limit\nbest="),
        "{stdout}"
    );

    let (code, _, stderr) = run(&["oracle", "--proposals", "11", "--capacity", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("TooLarge"), "{stderr}");
}
