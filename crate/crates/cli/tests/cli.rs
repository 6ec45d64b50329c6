use std::fs;
use std::path::Path;
use std::process::Command;

use tempfile::TempDir;

const A: &str = r#"{"m":1,"block_sizes":[2],"rows":[[0,1],[0,0]]}"#;
const A_T: &str = r#"{"m":1,"block_sizes":[2],"rows":[[0,0],[1,0]]}"#;
const SINGULAR: &str = r#"{"m":1,"block_sizes":[2],"rows":[[0,0],[0,0]]}"#;
const NULL: &str = r#"{"m":1,"block_sizes":[0],"rows":[]}"#;
const REDUCE: &str = r#"[{"type":"reduce","component":0,"offset":0}]"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_slicecert")).args(args).current_dir(dir).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn workdir() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in
        [("a.json", A), ("at.json", A_T), ("bad.json", SINGULAR), ("null.json", NULL), ("mv.json", REDUCE)]
    {
        fs::write(dir.path().join(name), text).unwrap();
    }
    fs::write(dir.path().join("broken.json"), "{\"m\": 1,").unwrap();
    dir
}

fn export(dir: &Path, name: &str) -> String {
    let file = format!("{name}.json");
    assert_eq!(run(dir, &["catalog", "export", name, "-o", &file]).code, 0);
    file
}

#[test]
fn help_and_version_succeed() {
    let d = workdir();
    assert_eq!(run(d.path(), &["--help"]).code, 0);
    assert_eq!(run(d.path(), &["certify", "--help"]).code, 0);
    assert_eq!(run(d.path(), &["--version"]).code, 0);
}

#[test]
fn usage_errors_exit_64() {
    let d = workdir();
    let p = d.path();
    assert_eq!(run(p, &[]).code, 64);
    assert_eq!(run(p, &["frobnicate"]).code, 64);
    assert_eq!(run(p, &["validate"]).code, 64);
    assert_eq!(run(p, &["validate", "missing.json"]).code, 64);
    assert_eq!(run(p, &["validate", "broken.json"]).code, 64);
    assert_eq!(run(p, &["catalog", "export", "no-such-entry"]).code, 64);
    let odd = run(p, &["certify", "a.json", "--derived", "a.json"]);
    assert_eq!(odd.code, 64);
    assert!(odd.stderr.contains("even number"));
}

#[test]
fn validate_reports_violations() {
    let d = workdir();
    assert_eq!(run(d.path(), &["validate", "a.json"]).code, 0);
    let bad = run(d.path(), &["validate", "bad.json"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stdout.contains("det(A_00 - A_00^T) = 0"));
}

#[test]
fn replay_checks_the_expected_endpoint() {
    let d = workdir();
    let p = d.path();
    assert_eq!(run(p, &["replay", "a.json", "mv.json", "--expect", "null.json"]).code, 0);
    assert_eq!(run(p, &["replay", "a.json", "mv.json", "--expect", "a.json"]).code, 2);
    assert_eq!(run(p, &["replay", "a.json", "mv.json", "-o", "end.json"]).code, 0);
    assert_eq!(fs::read_to_string(p.join("end.json")).unwrap().split_whitespace().collect::<String>(), NULL);
}

#[test]
fn reduce_and_goodbasis_on_the_staircase() {
    let d = workdir();
    let p = d.path();
    let s = export(p, "staircase-7");
    assert_eq!(run(p, &["goodbasis", &s, "-o", "gb.json"]).code, 0);
    assert_eq!(run(p, &["reduce", &s, "-o", "red.json"]).code, 0);
    assert_eq!(run(p, &["replay", &s, "red.json", "--expect", "null.json"]).code, 0);
    let t = export(p, "trefoil-matrix");
    assert_eq!(run(p, &["goodbasis", &t]).code, 2);
    assert_eq!(run(p, &["reduce", &t]).code, 2);
}

#[test]
fn sequiv_connects_a_matrix_to_its_transpose() {
    let d = workdir();
    let p = d.path();
    let r = run(p, &["sequiv", "a.json", "at.json", "-o", "path.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("found"));
    assert_eq!(run(p, &["replay", "a.json", "path.json", "--expect", "at.json"]).code, 0);
    assert_eq!(run(p, &["normalize", "a.json", "path.json", "-o", "norm.json"]).code, 0);
    assert_eq!(run(p, &["replay", "a.json", "norm.json", "--expect", "at.json"]).code, 0);
}

#[test]
fn milnor_commands() {
    let d = workdir();
    let p = d.path();
    let ws = export(p, "whitehead-string");
    let mu = run(p, &["mu", &ws, "--index", "1,1,2,2"]);
    assert_eq!(mu.code, 0);
    assert!(mu.stdout.contains("μ̄(1122) = 1"));
    assert_eq!(run(p, &["mu", &ws, "--index", "1,3"]).code, 64);
    let w = export(p, "whitehead");
    assert_eq!(run(p, &["ht", &w]).code, 0);
    assert_eq!(run(p, &["htplus", &w, "--sublink", "1", "--link", "2"]).code, 0);
    let b = export(p, "borromean");
    let ht = run(p, &["ht", &b]);
    assert_eq!(ht.code, 2);
    assert!(ht.stdout.contains("μ̄(123)"));
    let h = export(p, "hopf");
    assert_eq!(run(p, &["htplus", &h]).code, 2);
}

#[test]
fn certify_verdicts_and_exit_codes() {
    let d = workdir();
    let p = d.path();
    let h = export(p, "hopf");
    let fail = run(p, &["certify", "a.json", "--derived", &h, &h]);
    assert_eq!(fail.code, 2);
    assert!(fail.stdout.contains("derived-a-1.1"));
    let u = export(p, "unlink-2");
    assert_eq!(run(p, &["certify", "a.json", "--derived", &u, &u]).code, 0);
    assert_eq!(run(p, &["certify", "a.json"]).code, 1);
    let t = export(p, "trefoil-matrix");
    assert_eq!(run(p, &["certify", &t]).code, 2);
    let l = export(p, "lbeta");
    assert_eq!(run(p, &["certify", "--bundle", &l, "--depth", "2"]).code, 1);
}

#[test]
fn lbeta_rebuilds_the_catalog_bundle() {
    let d = workdir();
    let p = d.path();
    let ws = export(p, "whitehead-string");
    let l = export(p, "lbeta");
    assert_eq!(run(p, &["lbeta", &ws, "--bundle-out", "built.json", "-o", "cert.json"]).code, 0);
    assert_eq!(fs::read(p.join("built.json")).unwrap(), fs::read(p.join(&l)).unwrap());
    // A closed diagram is not a string link.
    let h = export(p, "hopf");
    assert_eq!(run(p, &["lbeta", &h]).code, 64);
}

#[test]
fn outputs_are_deterministic() {
    let d = workdir();
    let p = d.path();
    let l = export(p, "lbeta");
    let s = export(p, "staircase-7");
    for round in ["1", "2"] {
        run(p, &["certify", "--bundle", &l, "-o", &format!("cert{round}.json")]);
        run(p, &["goodbasis", &s, "-o", &format!("gb{round}.json")]);
        run(p, &["sequiv", "a.json", "at.json", "-o", &format!("path{round}.json")]);
    }
    for stem in ["cert", "gb", "path"] {
        let one = fs::read(p.join(format!("{stem}1.json"))).unwrap();
        let two = fs::read(p.join(format!("{stem}2.json"))).unwrap();
        assert_eq!(one, two, "{stem}");
    }
    let list = run(p, &["catalog", "list"]);
    assert_eq!(list.code, 0);
    assert!(list.stdout.contains("lbeta"));
}
