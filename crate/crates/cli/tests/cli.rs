use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pmat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pmat")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGLE: &str = "3 3\n1 2\n1 3\n2 3\n";
const EDGE: &str = "2 1\n1 2\n";

#[test]
fn maxcut_answers() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let empty = file(&dir, "empty.txt", "3 0\n");

    let run = pmat(&["maxcut", s(&k3), "2"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("YES\nCUT cut_size=2 side="), "{}", run.stdout);
    assert_eq!(pmat(&["maxcut", s(&k3), "3"]).code, 1);
    assert_eq!(pmat(&["maxcut", s(&empty), "1"]).code, 1);
    assert_eq!(pmat(&["maxcut", s(&empty), "0"]).code, 0);
}

#[test]
fn pipeline_examples() {
    let dir = TempDir::new().unwrap();
    let edge = file(&dir, "edge.txt", EDGE);
    let k3 = file(&dir, "k3.txt", TRIANGLE);

    let run = pmat(&["pipeline", s(&edge), "1"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("threshold 8)"), "{}", run.stdout);
    for stage in ["maxcut", "rnorm", "interval", "pmatrix"] {
        assert!(run.stdout.contains(&format!("{stage}: YES")), "{}", run.stdout);
    }
    assert!(run.stdout.ends_with("CONSISTENT\n"));

    let run = pmat(&["pipeline", s(&edge), "2"]);
    assert_eq!(run.code, 0);
    for stage in ["maxcut", "rnorm", "interval", "pmatrix"] {
        assert!(run.stdout.contains(&format!("{stage}: NO")), "{}", run.stdout);
    }

    let run = pmat(&["pipeline", s(&k3), "2"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("r(A) 23 vs threshold 23"), "{}", run.stdout);
}

#[test]
fn pipeline_size_cap_and_bad_k() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", "4 1\n1 2\n");
    let run = pmat(&["pipeline", s(&k4), "1"]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("--max-n"));
    assert_eq!(pmat(&["pipeline", s(&k4), "1", "--max-n", "4"]).code, 0);
    assert_eq!(pmat(&["pipeline", s(&k4), "0", "--max-n", "4"]).code, 3);
}

#[test]
fn single_problem_commands() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "2 2\n3 -1\n-1 3\n");
    let run = pmat(&["rnorm", s(&a)]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("r=8\n"), "{}", run.stdout);
    assert_eq!(pmat(&["rnorm", s(&a), "8"]).code, 0);
    assert_eq!(pmat(&["rnorm", s(&a), "17/2"]).code, 1);

    let m = file(&dir, "m.txt", "2 2\n1 2\n3 1\n");
    let run = pmat(&["pmatrix", s(&m)]);
    assert_eq!(run.code, 1);
    assert_eq!(run.stdout, "NOT_P index_set=1,2 minor=-5\n");
    let id = file(&dir, "id.txt", "2 2\n1 0\n0 1\n");
    let run = pmat(&["pmatrix", s(&id)]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "P\n"));

    let iv = file(&dir, "iv.txt", "center\n1 1\n1\nradius\n1 1\n2\n");
    let run = pmat(&["interval-sing", s(&iv)]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("SINGULAR\n1 1\n"));
    let tight = file(&dir, "tight.txt", "lower 1 1 1 upper 1 1 2");
    assert_eq!(pmat(&["interval-sing", s(&tight)]).stdout, "NONSINGULAR\n");
}

#[test]
fn reductions_chain_through_files() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let a = dir.path().join("a.txt");
    let iv = dir.path().join("iv.txt");
    let m = dir.path().join("m.txt");

    let run = pmat(&["reduce-maxcut", s(&k3), "2", "--out", s(&a)]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "threshold 23\n"));
    assert_eq!(fs::read_to_string(&a).unwrap(), "3 3\n7 -1 -1\n-1 7 -1\n-1 -1 7\n");
    assert_eq!(pmat(&["reduce-rnorm", s(&a), "23", "--out", s(&iv)]).code, 0);
    assert_eq!(pmat(&["interval-sing", s(&iv)]).code, 0);
    assert_eq!(pmat(&["reduce-interval", s(&iv), "--out", s(&m)]).code, 0);
    assert_eq!(pmat(&["pmatrix", s(&m)]).code, 1);

    let run = pmat(&["reduce-maxcut", s(&k3), "2"]);
    assert!(run.stdout.starts_with("threshold 23\n3 3\n7 -1 -1\n"));
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.txt", "2 2\n1 2\n3 1\n");
    let cert = file(&dir, "c.cert", "NOT_P index_set=1,2 minor=-5\n");
    let run = pmat(&["verify", "non-p-minor", s(&m), s(&cert)]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "VALID\n"));

    let wrong = file(&dir, "w.cert", "NOT_P index_set=1,2 minor=-4\n");
    assert_eq!(pmat(&["verify", "non-p-minor", s(&m), s(&wrong)]).code, 1);
    let positive = file(&dir, "p.cert", "NOT_P index_set=1 minor=1\n");
    assert_eq!(pmat(&["verify", "non-p-minor", s(&m), s(&positive)]).code, 1);

    let iv = file(&dir, "iv.txt", "center\n1 1\n1\nradius\n1 1\n2\n");
    let b = file(&dir, "b.cert", "SINGULAR\n1 1\n0\n");
    assert_eq!(pmat(&["verify", "singular-matrix", s(&iv), s(&b)]).code, 0);
    let outside = file(&dir, "o.cert", "SINGULAR\n1 1\n4\n");
    assert_eq!(pmat(&["verify", "singular-matrix", s(&iv), s(&outside)]).code, 1);

    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let good = file(&dir, "cut.cert", "CUT cut_size=2 side=1,1,2\n");
    assert_eq!(pmat(&["verify", "cut", s(&k3), s(&good), "--threshold", "2"]).code, 0);
    assert_eq!(pmat(&["verify", "cut", s(&k3), s(&good), "--threshold", "3"]).code, 1);
    let bad = file(&dir, "bad.cert", "CUT cut_size=3 side=1,1,2\n");
    let run = pmat(&["verify", "cut", s(&k3), s(&bad)]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.starts_with("INVALID"));

    let garbage = file(&dir, "g.cert", "CUT cut_size=two\n");
    let run = pmat(&["verify", "cut", s(&k3), s(&garbage)]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.starts_with("INVALID: malformed"));
    assert_eq!(pmat(&["verify", "singular-matrix", s(&k3), s(&good)]).code, 1);
}

#[test]
fn emitted_certificates_reverify() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let out = dir.path().join("certs");
    assert_eq!(pmat(&["pipeline", s(&k3), "2", "--cert-out", s(&out)]).code, 0);
    let p = |name: &str| out.join(name).to_str().unwrap().to_string();
    let checks = [
        vec!["cut", "graph.txt", "cut.cert", "--threshold", "2"],
        vec!["norm-witness", "rnorm-matrix.txt", "norm-witness.cert", "--threshold", "23"],
        vec!["singular-matrix", "interval.txt", "singular-matrix.cert"],
        vec!["non-p-minor", "pmatrix.txt", "non-p-minor.cert"],
    ];
    for check in checks {
        let (i, c) = (p(check[1]), p(check[2]));
        let mut args = vec!["verify", check[0], &i, &c];
        args.extend_from_slice(&check[3..]);
        let run = pmat(&args);
        assert_eq!(run.code, 0, "{check:?}: {}", run.stdout);
    }

    let cert = dir.path().join("single.cert");
    assert_eq!(pmat(&["maxcut", s(&k3), "2", "--cert-out", s(&cert)]).code, 0);
    assert_eq!(pmat(&["verify", "cut", s(&k3), s(&cert), "--threshold", "2"]).code, 0);
}

#[test]
fn input_errors_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "2 2\n1 x\n0 1\n");
    let run = pmat(&["pmatrix", s(&bad)]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("bad.txt"));
    assert_eq!(pmat(&["pmatrix", "/nonexistent/file"]).code, 3);
    assert_eq!(pmat(&["maxcut"]).code, 3);
    assert_eq!(pmat(&["no-such-command"]).code, 3);
    let rect = file(&dir, "rect.txt", "1 2\n1 2\n");
    assert_eq!(pmat(&["pmatrix", s(&rect)]).code, 3);
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    assert_eq!(pmat(&["reduce-maxcut", s(&k3), "0"]).code, 3);
}

#[test]
fn sweep_reports_consistency() {
    let run = pmat(&["sweep", "--max-n", "3", "--random", "20", "--seed", "5"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.contains("0 inconsistent"));
}
