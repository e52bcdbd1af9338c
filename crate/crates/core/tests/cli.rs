use std::path::Path;
use std::process::{Command, Output};

fn jordiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordiv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut all = vec!["build"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let o = jordiv(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn build_spin_prints_unit() {
    let o = jordiv(&["build", "spin", "--field", "GF:3", "--diag", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim 3\n"));
    assert!(text.contains("unit 1 0 0\n"));
}

#[test]
fn build_matn_has_eight_constants() {
    let o = jordiv(&["build", "matn", "--n", "2", "--coeff", "GF:3"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("sc ")).count(), 8);
}

#[test]
fn divsearch_on_gf5_identity_form() {
    let dir = tempfile::tempdir().unwrap();
    let spin = build_to(dir.path(), "s.txt", &["spin", "--field", "GF:5", "--diag", "1,1"]);
    let o = jordiv(&["divsearch", &spin]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0 DIV derivations"));
}

#[test]
fn spincriterion_prints_pair() {
    let o = jordiv(&["spincriterion", "--field", "GF:3", "--diag", "1,1"]);
    assert_eq!(stdout(&o), "pair x = (1,0), y = (0,1)\n");
    let o = jordiv(&["spincriterion", "--field", "GF:5", "--diag", "1,1"]);
    assert_eq!(stdout(&o), "no pair\n");
}

#[test]
fn albert_idempotent_is_not_invertible() {
    let dir = tempfile::tempdir().unwrap();
    let a = build_to(dir.path(), "a.txt", &["albert", "--field", "GF:5", "--gamma", "1,1,1", "--mu", "4,4,4"]);
    let o = jordiv(&["invert", &a, "x11"]);
    assert_eq!(stdout(&o), "not invertible, n(A) = 0\n");
    let o = jordiv(&["peirce", &a]);
    assert_eq!(stdout(&o), "J11: dim 1\nJ22: dim 1\nJ33: dim 1\nJ12: dim 8\nJ13: dim 8\nJ23: dim 8\n");
    let o = jordiv(&["peirce", &a, "x11"]);
    assert_eq!(stdout(&o), "1: dim 1\n1/2: dim 16\n0: dim 10\n");
}

#[test]
fn divcheck_and_reduce_on_constructed_derivation() {
    let dir = tempfile::tempdir().unwrap();
    let spin = build_to(dir.path(), "s.txt", &["spin", "--field", "GF:3", "--diag", "1,1"]);
    let map = dir.path().join("d.txt");
    std::fs::write(&map, "map 3\n3 2 1\n2 3 2\n").unwrap();
    let m = map.display().to_string();
    let o = jordiv(&["divcheck", &spin, &m, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["command", "inputs", "verdict", "witness", "method", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["verdict"], "div");
    assert_eq!(v["method"], "exhaustive");
    let q = dir.path().join("q.txt");
    let o = jordiv(&["reduce", &spin, &m, "--quotient", &q.display().to_string()]);
    assert!(stdout(&o).starts_with("dim M = 0\ndim quotient = 3\nverdict: div\n"));
    assert_eq!(std::fs::read_to_string(q).unwrap(), std::fs::read_to_string(&spin).unwrap().replace("family spin\n", ""));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "field Q\ndim 2\nsc 1 1 9 1\n").unwrap();
    let o = jordiv(&["check", &bad.display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: ParseError"));

    assert_eq!(jordiv(&["build", "spin", "--field", "GF:4", "--diag", "1"]).status.code(), Some(2));
    assert_eq!(jordiv(&["frobnicate"]).status.code(), Some(2));

    // the identity is not a derivation: mathematical precondition, exit 3
    let spin = build_to(dir.path(), "s.txt", &["spin", "--field", "GF:3", "--diag", "1,1"]);
    let id = dir.path().join("id.txt");
    std::fs::write(&id, "map 3\n1 1 1\n2 2 1\n3 3 1\n").unwrap();
    let o = jordiv(&["divcheck", &spin, &id.display().to_string()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: NotADerivation"));
}

#[test]
fn build_round_trips_through_plus_and_extend() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = build_to(dir.path(), "m2.txt", &["matn", "--n", "2", "--coeff", "GF:3"]);
    let plus = build_to(dir.path(), "p.txt", &["plus", &m2]);
    let o = jordiv(&["check", &plus]);
    assert_eq!(stdout(&o), "commutative: true\nassociative: false\njordan: true\n");
    let ext = build_to(dir.path(), "e.txt", &["extend", &plus, "--lambda", "1"]);
    assert!(std::fs::read_to_string(ext).unwrap().contains("dim 8\n"));
    let o = jordiv(&["build", "cd", "--field", "Q", "--stages", "3", "--mu", "-1,-1,-1"]);
    assert!(stdout(&o).contains("dim 8\n"));
    let cd = build_to(dir.path(), "o.txt", &["cd", "--field", "GF:5", "--stages", "3", "--mu", "-1,-1,-1"]);
    let o = jordiv(&["derivations", &cd]);
    assert!(stdout(&o).starts_with("dim Der = 14\n"));
}

#[test]
fn hermitian_of_transpose() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = build_to(dir.path(), "m2.txt", &["matn", "--n", "2", "--coeff", "GF:5"]);
    let t = dir.path().join("t.txt");
    // E11, E12, E21, E22 -> E11, E21, E12, E22
    std::fs::write(&t, "map 4\n1 1 1\n3 2 1\n2 3 1\n4 4 1\n").unwrap();
    let h = build_to(dir.path(), "h.txt", &["hermitian", &m2, "--inv", &t.display().to_string()]);
    let o = jordiv(&["derivations", &h]);
    assert!(stdout(&o).starts_with("dim Der = 1\n"));
}
