use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signed-bell")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key},")))
        .unwrap_or_else(|| panic!("{key} missing in\n{text}"))
        .to_string()
}

#[test]
fn table_at_45_degrees() {
    let o = run(&["table", "--coplanar-theta", "45"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.starts_with("# quadruple,probability\n"));
    assert_eq!(value(&t, "+-+-"), "-0.0258883476483");
    assert_eq!(value(&t, "sum"), "1");
    assert_eq!(value(&t, "delta"), "0");
    assert_eq!(t.lines().count(), 19);
}

#[test]
fn photon_angles_halve_the_input() {
    let spin = stdout(&run(&["table", "--coplanar-theta", "45"]));
    let photon = stdout(&run(&["table", "--coplanar-theta", "22.5", "--photon"]));
    assert_eq!(spin, photon);
}

#[test]
fn chsh_at_45_degrees() {
    let t = stdout(&run(&["chsh", "--coplanar-theta", "45"]));
    for key in ["closed_form", "dot_form", "master_form"] {
        assert_eq!(value(&t, key), "2.82842712475");
    }
    assert_eq!(value(&t, "violates"), "true");
}

#[test]
fn chsh_with_explicit_axes() {
    let o = run(&["chsh", "--axes", "0,0,1", "1,0,0", "0.7071067811865476,0,0.7071067811865476", "-0.7071067811865476,0,0.7071067811865476"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(!t.contains("closed_form"));
    assert_eq!(value(&t, "dot_form"), value(&t, "master_form"));
}

#[test]
fn sweep_shape_and_values() {
    let t = stdout(&run(&["sweep", "--steps", "5", "--theta-max", "180"]));
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0].split(',').count(), 21);
    let row45: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(row45[0], "45");
    assert_eq!(row45[1 + 5], "-0.0258883476483");
    assert_eq!(row45[18], "2.82842712475");
}

#[test]
fn tsv_output() {
    let t = stdout(&run(&["bell", "--format", "tsv"]));
    assert!(t.starts_with("# quantity\tvalue\n"));
    assert!(t.contains("lhs\t0.375\n"));
    assert!(t.contains("rhs\t0.25\n"));
    assert!(t.contains("violated\ttrue\n"));
}

#[test]
fn lhv_reports_pass() {
    let o = run(&["lhv", "--trials", "200000", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "result"), "PASS,,");
}

#[test]
fn lhv_strategy_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    fs::write(&path, "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n").unwrap();
    let o = run(&["lhv", "--trials", "1000", "--strategy", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(value(&stdout(&o), "CHSH").starts_with("2,0,2"));
}

#[test]
fn determinism_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for (i, threads) in ["1", "4"].iter().enumerate() {
        let p = dir.path().join(format!("lhv{i}.csv"));
        let o = run(&["lhv", "--trials", "300000", "--seed", "17", "--threads", threads, "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
        files.push(fs::read(&p).unwrap());
    }
    assert_eq!(files[0], files[1]);
    let a = run(&["sweep", "--steps", "181"]).stdout;
    let b = run(&["sweep", "--steps", "181"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn audits_run_clean() {
    for name in ["bell64", "chsh-signed", "stapp71", "stapp85", "bell71"] {
        let o = run(&["audit", name, "--random", "100"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let t = stdout(&o);
        assert!(t.contains("signed,status,VIOLATED"), "{name}");
        assert!(t.contains("nonnegative,status,PASS"), "{name}");
        assert!(t.contains("randomized,violations,0"), "{name}");
        assert!(t.contains("signed,witness,"), "{name}");
    }
    let t = stdout(&run(&["audit", "stapp85", "--random", "0"]));
    assert!(t.contains("value_set,11.6568542495 2 0.343145750508"));
    assert!(t.contains("signed,mean,-0.897056274848"));
}

#[test]
fn validation_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &["table"],
        &["table", "--axes", "1,1,1", "0,0,1", "0,0,1", "0,0,1"],
        &["table", "--axes", "0,0,1", "0,0,1"],
        &["table", "--coplanar-theta", "nan"],
        &["chsh", "--photon", "--axes", "0,0,1", "0,0,1", "0,0,1", "0,0,1"],
        &["sweep", "--theta-min", "10", "--theta-max", "10"],
        &["sweep", "--steps", "1"],
        &["lhv", "--trials", "0"],
        &["lhv", "--strategy", "weights:1,-1,1,0,0,0,0,0,0,0,0,0,0,0,0,1"],
        &["lhv", "--threads", "0"],
        &["audit", "peres"],
        &["table", "--coplanar-theta", "45", "--format", "json"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["audit", "--help"]).status.code(), Some(0));
}
