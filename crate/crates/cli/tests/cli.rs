use std::path::Path;
use std::process::{Command, Output};

use bilevel_core::manifest::Manifest;
use bilevel_core::report::RunReport;

fn bilevel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilevel"))
        .args(args)
        .env_remove("BILEVEL_REPORT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn report(dir: &Path, kind: &str) -> RunReport {
    RunReport::from_jsonl(&std::fs::read_to_string(dir.join(format!("{kind}.jsonl"))).unwrap()).unwrap()
}

#[test]
fn eval_prints_tensors() {
    let o = bilevel(&["eval", "ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "f", "--deriv", "xy"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "-1.5"));
    let o = bilevel(&["eval", "ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "G", "--deriv", "y"]);
    assert_eq!(stdout(&o).trim(), "[]");
    let o = bilevel(&["eval", "ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "g", "--deriv", "yy"]);
    assert_eq!(stdout(&o).trim(), "[0;0;0]");
    // F = x + y2 at x = 2, y = (6, 0)
    let o = bilevel(&["eval", "Bard1991Ex1", "--x", "2", "--y", "6", "0", "--func", "F"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = bilevel(&["eval", "Bard1991Ex1", "--x", "2", "--y", "6 0", "--func", "f"]);
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&bilevel(&["eval", "NoSuchProblem1999", "--x", "1", "--y", "1", "--func", "F"])), 2);
    assert_eq!(code(&bilevel(&["eval", "Bard1988Ex1", "--x", "1", "2", "--y", "1", "--func", "F"])), 2);
    assert_eq!(code(&bilevel(&["eval", "Bard1988Ex1", "--x", "1", "--y", "1", "--func", "Q"])), 2);
    assert_eq!(code(&bilevel(&["eval", "Bard1988Ex1", "--x", "1", "--y", "1", "--func", "F", "--params", "rho=2"])), 2);
    assert_eq!(code(&bilevel(&["no-such-command"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&bilevel(&["validate-solutions", "--only", "CalamaiVicente1994a", "--params", "rho=0.5", "--out-dir", d])), 2);
}

#[test]
fn list_filters() {
    let o = bilevel(&["list", "--labels", "g=O", "--names"]);
    assert!(stdout(&o).lines().any(|l| l == "HenrionSurowiec2011"));
    let o = bilevel(&["list", "--dims", "n_G=0", "--names"]);
    assert!(stdout(&o).lines().any(|l| l == "CalamaiVicente1994a"));
    let o = bilevel(&["list", "--equality-origin", "--names"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = bilevel(&["list"]);
    let head = stdout(&o).lines().next().unwrap().to_string();
    let cols: Vec<&str> = head.split_whitespace().collect();
    assert_eq!(cols, ["name", "labels", "n_x", "n_y", "n_G", "n_g", "F*", "f*", "source"]);
    assert_eq!(stdout(&o).lines().count(), bilevel_core::records().count() + 1);
}

#[test]
fn derivative_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = bilevel(&["check-derivatives", "--seed", "7", "--out-dir", d]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let rep = report(dir.path(), "derivcheck");
    assert_eq!(rep.rows.len(), bilevel_core::records().count());
    assert_eq!(rep.config["fd"]["eps"], 1e-6);
    assert!(dir.path().join("derivcheck.csv").exists());

    let o = bilevel(&["check-derivatives", "--only", "MorganPatrone2006b", "--out-dir", d]);
    assert_eq!(code(&o), 0);
    let o = bilevel(&["check-derivatives", "--only", "Bard1988Ex1", "--tol", "1e-12", "--out-dir", d]);
    assert_eq!(code(&o), 1);
}

#[test]
fn rerun_from_report_reproduces() {
    let dir = tempfile::tempdir().unwrap();
    let again = tempfile::tempdir().unwrap();
    for (kind, args) in [
        ("derivcheck", vec!["check-derivatives", "--only", "Colson2002BIPA3,Bard1988Ex1", "--seed", "3", "--samples", "7"]),
        ("solve", vec!["solve", "Bard1988Ex1", "--seed", "2", "--budget", "800"]),
        ("validate", vec!["validate-solutions", "--only", "CalamaiVicente1994a", "--params", "rho=2"]),
    ] {
        let mut a = args.clone();
        a.extend(["--out-dir", dir.path().to_str().unwrap()]);
        bilevel(&a);
        let first = report(dir.path(), kind);
        let path = dir.path().join(format!("{kind}.jsonl"));
        let sub = args[0];
        bilevel(&[sub, "--from-report", path.to_str().unwrap(), "--out-dir", again.path().to_str().unwrap()]);
        let second = report(again.path(), kind);
        assert_eq!(first.without_timestamp().to_jsonl(), second.without_timestamp().to_jsonl(), "{kind}");
    }
}

#[test]
fn validation_runs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = bilevel(&["validate-solutions", "--only", "", "--out-dir", d]);
    assert_eq!(code(&o), 0);
    assert!(report(dir.path(), "validate").rows.is_empty());

    let o = bilevel(&["validate-solutions", "--only", "AiyoshiShimizu1984Ex2", "--out-dir", d]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("AiyoshiShimizu1984Ex2#0 global confirmed"));
    assert!(out.contains("AiyoshiShimizu1984Ex2#1 local confirmed"));

    // stated points that fail as printed make the full run exit 1
    let o = bilevel(&["validate-solutions", "--out-dir", d]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("Zlobec2001b not_checkable (no_optimal_solution)"));
}

#[test]
fn solve_and_report_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_bilevel"))
        .args(["solve", "Bard1988Ex1", "--seed", "1"])
        .env("BILEVEL_REPORT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let rep = report(dir.path(), "solve");
    let f = rep.rows[0]["upper"].as_f64().unwrap();
    assert!((f - 17.0).abs() <= 1e-2);
    assert_eq!(rep.config["solve"]["seed"], 1);
    assert_eq!(code(&bilevel(&["solve"])), 2);
}

#[test]
fn manifest_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("manifest.json");
    assert_eq!(code(&bilevel(&["export-manifest", path.to_str().unwrap()])), 0);
    assert_eq!(Manifest::load(&path).unwrap(), Manifest::from_registry());
}

#[test]
fn mpcc_dump() {
    let o = bilevel(&["mpcc-dump", "LamparielloSagratella2017Ex31", "--x", "1", "--y", "0", "--lambda", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "residual.total = 0.0"));
    assert_eq!(code(&bilevel(&["mpcc-dump", "MorganPatrone2006b", "--x", "0", "--y", "0"])), 2);
}
