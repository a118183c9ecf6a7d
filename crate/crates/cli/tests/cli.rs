//! End-to-end runs of the built binary: exit codes, stdin input, and the
//! text and JSON output contracts.

use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn radzero(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_radzero"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(args: &[&str], stdin: &str) -> i32 {
    radzero(args, stdin).status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const C3: &str = "quiver C3\nvertex 1 2 3\narrow 1 -> 2\narrow 2 -> 3\narrow 3 -> 1\n";
const LOOPS: &str = "quiver L\nvertex x\narrow x -> x [2,2]\n";

struct Files {
    _dir: TempDir,
    c3: String,
    loops: String,
    broken: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let c3 = write("c3.qv", C3);
    let loops = write("loops.qv", LOOPS);
    let broken = write("broken.qv", "vertex 1\narrow 1 => 1\n");
    Files { _dir: dir, c3, loops, broken }
}

#[test]
fn success_exits_zero() {
    let f = files();
    for args in [
        vec!["validate", &f.c3, &f.loops],
        vec!["info", &f.c3],
        vec!["sigma", &f.c3],
        vec!["hom-dim", &f.c3, "--from", "1", "--to", "2", "--shift", "1"],
        vec!["k-dim", &f.loops, "--shift", "0"],
        vec!["verify-theorem-a", &f.c3, "--range", "-6..6"],
        vec!["verify", &f.c3, "--prime", "3"],
        vec!["export", "--dot", &f.loops],
        vec!["gen", "cycle", "5"],
    ] {
        assert_eq!(code(&args, ""), 0, "{args:?}");
    }
}

#[test]
fn refusals_exit_one_with_explanation() {
    let f = files();
    let out = radzero(&["sigma", &f.loops], "");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not Hom-finite") && err.contains("(2,2)"), "{err}");

    let out = radzero(&["sigma", &f.loops, "--json"], "");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "refused");

    // Oracle refuses valued quivers.
    assert_eq!(code(&["verify"], "vertex 1 2\nweight 2 = 2\narrow 1 -> 2 [2,1]\n"), 1);
    assert_eq!(code(&["trivial-ext", "--n", "70"], "vertex x\narrow x -> x [2,2]\n"), 1);
}

#[test]
fn invalid_input_exits_two() {
    let f = files();
    let out = radzero(&["info", &f.broken], "");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("broken.qv:2:"), "{err}");

    let out = radzero(&["validate", "--json"], "vertex a\narrow a -> b\n");
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "unknown_vertex");
    assert_eq!(v["error"]["line"], 2);

    assert_eq!(code(&["validate", &f.c3, &f.broken], ""), 2);
    assert_eq!(code(&["info", "/definitely/missing.qv"], ""), 2);
    assert_eq!(code(&["hom-dim", &f.c3, "--from", "1", "--to", "9", "--shift", "0"], ""), 2);
    assert_eq!(code(&["verify-theorem-a", &f.c3, "--range", "six"], ""), 2);
    assert_eq!(code(&["bratteli", &f.c3], ""), 2);
    assert_eq!(code(&["frobnicate"], ""), 2);
    assert_eq!(code(&["adjoin-source", &f.c3, "--id", "2", "--arrow", "1"], ""), 2);
    assert_eq!(code(&["vertex 1\narrow 1 -> 1 [2,3]\n"], ""), 2);
    assert_eq!(code(&["info"], "vertex 1\narrow 1 -> 1 [2,3]\n"), 2);
}

#[test]
fn stdin_and_dash_read_the_same_document() {
    let a = radzero(&["info"], C3);
    let b = radzero(&["info", "-"], C3);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn generated_quivers_pipe_into_other_commands() {
    let gen = radzero(&["gen", "cycle", "4"], "");
    let sigma = radzero(&["sigma", "--json"], &stdout(&gen));
    assert_eq!(sigma.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&sigma)).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["dimension"], "4");

    let ext = radzero(&["adjoin-sink", "--id", "t", "--arrow", "2"], &stdout(&gen));
    let k = radzero(&["k-dim", "--shift", "0", "--json"], &stdout(&ext));
    let v: Value = serde_json::from_str(&stdout(&k)).unwrap();
    assert_eq!(v["status"], "finite");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&["--help"], ""), 0);
    assert_eq!(code(&["--version"], ""), 0);
}
