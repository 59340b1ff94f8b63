use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn eh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_writes_osh() {
    let o = eh(&["gen", "--construction", "hprime"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("osh 1\nr 3\nn 6\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 10);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.osh");
    let o = eh(&[
        "gen",
        "--construction",
        "affine",
        "--q",
        "3",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 12);

    for args in [
        &["gen", "--construction", "ngon", "--n", "7"][..],
        &["gen", "--construction", "blowup", "--sizes", "2,1,1,1,1,0"],
        &[
            "gen",
            "--construction",
            "parity",
            "--n",
            "8",
            "--seed",
            "42",
        ],
        &["gen", "--construction", "cliqueiso", "--n", "6"],
    ] {
        assert!(eh(args).status.success(), "{args:?}");
    }
    // seeded output is reproducible
    let a = eh(&["gen", "--construction", "parity", "--n", "9", "--seed", "7"]);
    let b = eh(&["gen", "--construction", "parity", "--n", "9", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_errors() {
    assert_eq!(
        eh(&["gen", "--construction", "affine", "--q", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eh(&["gen", "--construction", "ngon"]).status.code(),
        Some(2)
    );
    assert_eq!(
        eh(&["gen", "--construction", "bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(
        dir.path(),
        "k4.osh",
        "osh 1\nr 3\nn 4\ne 0 1 2\ne 0 1 3\ne 0 2 3\ne 1 2 3\n",
    );
    let o = eh(&["check", &k4, "--q", "4:4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "violated 0 1 2 3\n");

    let o = eh(&["check", &k4, "--q", "4:0,2", "--profile", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "profile 4\nfree\n");

    let bad = write(dir.path(), "bad.osh", "osh 1\nr 3\nn 4\ne 0 1 1\n");
    let o = eh(&["check", &bad, "--q", "4:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let o = eh(&["check", "/nonexistent.osh", "--q", "4:4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = eh(&["check", &k4, "--q", "4:9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hom_exact_and_greedy() {
    let dir = tempfile::tempdir().unwrap();
    let o = eh(&["gen", "--construction", "hprime"]);
    let hp = write(dir.path(), "hp.osh", &stdout(&o));
    let o = eh(&["hom", "--exact", &hp]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("3 clique "));

    let e = write(dir.path(), "e.osh", "osh 1\nr 3\nn 5\n");
    let o = eh(&["hom", "--greedy", "--seed", "3", &e]);
    assert_eq!(stdout(&o), "5 coclique 0 1 2 3 4\n");
}

#[test]
fn extract_cases() {
    let dir = tempfile::tempdir().unwrap();
    let e = write(dir.path(), "e.osh", "osh 1\nr 3\nn 8\n");
    for case in ["41-44", "42-43", "42-44"] {
        let o = eh(&["extract", "--case", case, &e]);
        assert!(o.status.success(), "{case}");
        assert!(stdout(&o).starts_with("8 coclique") || stdout(&o).starts_with("7 coclique"));
    }
    let o = eh(&["extract", "--case", "41-44", "--trace", &e]);
    assert!(stdout(&o).contains("step 0: "));

    let g = write(
        dir.path(),
        "c5.osh",
        "osh 1\nr 2\nn 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n",
    );
    let o = eh(&["extract", "--case", "graph", "--m", "3", "--f", "3", &g]);
    assert!(o.status.success());
    assert_eq!(
        eh(&["extract", "--case", "graph", &g]).status.code(),
        Some(2)
    );

    let two = write(dir.path(), "two.osh", "osh 1\nr 3\nn 4\ne 0 1 2\ne 0 1 3\n");
    let o = eh(&["extract", "--case", "42-43", &two]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("spans"));
}

#[test]
fn enumerate_count_and_list() {
    let o = eh(&["enumerate", "--n", "6", "--q", "4:0,2,3", "--count"]);
    assert_eq!(stdout(&o), "2\n");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("classes");
    let o = eh(&[
        "enumerate",
        "--n",
        "5",
        "--q",
        "4:1,3,4",
        "--list",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let n: usize = stdout(&o).trim().parse().unwrap();
    assert_eq!(fs::read_dir(&out).unwrap().count(), n);
    assert!(out.join("0.osh").exists());
}

#[test]
fn hvalue_prints_value_count_and_minimizer() {
    let o = eh(&["hvalue", "--n", "6", "--q", "4:0,1,3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3 6"));
    assert_eq!(lines.next(), Some("osh 1"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("min.osh");
    let o = eh(&[
        "hvalue",
        "--n",
        "7",
        "--q",
        "4:1,2,3",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "7 2\n");
    assert!(fs::read_to_string(out)
        .unwrap()
        .starts_with("osh 1\nr 3\nn 7\n"));

    assert_eq!(
        eh(&["hvalue", "--n", "4", "--q", "4:0,1,2,3,4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let o = eh(&["verify", "--suite", "gvalues"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS g3/m=7"));

    let a = eh(&[
        "verify",
        "--suite",
        "ngon-alpha",
        "--nmax",
        "14",
        "--format",
        "kv",
    ]);
    let b = eh(&[
        "verify",
        "--suite",
        "ngon-alpha",
        "--nmax",
        "14",
        "--format",
        "kv",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().last().unwrap().ends_with("pass=true"));

    let o = eh(&["verify", "--suite", "gvalues", "--timing"]);
    assert!(stdout(&o).contains("wall time"));

    assert_eq!(eh(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
