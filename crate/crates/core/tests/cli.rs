use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ordim::dimension::verify_realizer;
use ordim::io::{parse_extensions, parse_poset};

const B3: &str = "poset 8\n0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n4 5\n4 6\n3 7\n5 7\n6 7\n";

fn ordim(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ordim"));
    cmd.args(args).env_remove("ORDIM_EXACT_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_lr_writes_files_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l5.poset");
    let o = ordim(&["gen-lr", "5", "--out", out.to_str().unwrap()], &[]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text, include_str!("fixtures/lr5.poset"));
    assert_eq!(parse_poset(&text).unwrap().len(), 19);

    let o = ordim(&["gen-lr", "5", "--dot", "-"], &[]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 28);

    let o = ordim(&["gen-lr", "0"], &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dim_reports_and_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = write(dir.path(), "b3", B3);
    let o = ordim(&["dim", &b3, "--witness"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("dim 3"));
    let p = parse_poset(B3).unwrap();
    let w = parse_extensions(&text.lines().skip(3).collect::<Vec<_>>().join("\n"), 8).unwrap();
    assert_eq!(w.len(), 3);
    assert_eq!(verify_realizer(&p, &w), Ok(()));

    let l5 = write(dir.path(), "l5", include_str!("fixtures/lr5.poset"));
    let o = ordim(&["dim", &l5], &[]);
    assert_eq!(
        stdout(&o),
        "dim 3\nmethod explicit-construction\nplanar no\n"
    );
}

#[test]
fn exact_cap_flag_overrides_env() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = write(dir.path(), "b3", B3);
    let o = ordim(&["dim", &b3, "--exact-cap", "2"], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("undecided"));
    let o = ordim(&["dim", &b3], &[("ORDIM_EXACT_CAP", "2")]);
    assert_eq!(o.status.code(), Some(1));
    let o = ordim(
        &["dim", &b3, "--exact-cap", "100000"],
        &[("ORDIM_EXACT_CAP", "2")],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = ordim(&["dim", &b3], &[("ORDIM_EXACT_CAP", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rc_answers() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = write(dir.path(), "b3", B3);
    let o = ordim(&["rc", &b3], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not RC\nwitness "));

    let l5 = write(dir.path(), "l5", include_str!("fixtures/lr5.poset"));
    let o = ordim(&["rc", &l5], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("RC\nreducibles 5\ndim 3\n"));

    let o = ordim(&["basic-block", &l5], &[]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("poset 19"));
}

#[test]
fn realizer_check() {
    let dir = tempfile::tempdir().unwrap();
    let l5 = write(dir.path(), "l5", include_str!("fixtures/lr5.poset"));
    let bad = write(
        dir.path(),
        "bad.ext",
        include_str!("fixtures/lr5_cascade.ext"),
    );
    let o = ordim(&["realizer", &l5, "--check", &bad], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "invalid: no extension puts 11 before 6\n");

    let o = ordim(&["dim", &l5, "--witness"], &[]);
    let good: String = stdout(&o)
        .lines()
        .skip(3)
        .map(|l| format!("{l}\n"))
        .collect();
    let good = write(dir.path(), "good.ext", &good);
    let o = ordim(&["realizer", &l5, "--check", &good], &[]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = ordim(&["dim", dir.path().join("missing").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    let junk = write(dir.path(), "junk", "poset 2\n0 zero\n");
    let o = ordim(&["dot", &junk], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(ordim(&["frobnicate"], &[]).status.code(), Some(2));
}

#[test]
fn battery_runs() {
    let o = ordim(
        &["battery", "--seed", "3", "--trials", "5", "--max-n", "7"],
        &[],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("adjunct-bounds: 5/5"));
}
