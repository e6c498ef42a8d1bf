mod common;

use std::process::{Command, Output};

fn sizett(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sizett"))
        .args(args)
        .env("SIZETT_LIBRARY", common::stdlib())
        .env_remove("SIZETT_PRELUDE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, src: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join(name);
    std::fs::write(&p, src).unwrap();
    let p = p.display().to_string();
    (dir, p)
}

#[test]
fn check_stdlib() {
    let lib = common::stdlib();
    let o = sizett(&["check", lib.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("ok examples.smltt"));
}

#[test]
fn smallness_violation_exits_1() {
    let (_d, p) = scratch(
        "bad.smltt",
        "def bad (w : exists i. Bool) : U := exind (z. type U) (i x. Bool) w\n",
    );
    let o = sizett(&["check", &p]);
    assert_eq!(o.status.code(), Some(1));
    let e = stderr(&o);
    assert!(e.contains("SmallnessViolation"), "{e}");
    assert!(e.contains("motive of ∃-induction"), "{e}");
}

#[test]
fn parse_error_exits_2() {
    let (_d, p) = scratch("p.smltt", "def x := (\n");
    let o = sizett(&["check", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("SyntaxError"));
}

#[test]
fn missing_file_exits_3() {
    let o = sizett(&["check", "/nonexistent/missing.smltt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_diagnostics() {
    let (_d, p) = scratch("j.smltt", "def t : Bool := tt\ndef f : Bool := star\n");
    let o = sizett(&["--json", "check", &p]);
    assert_eq!(o.status.code(), Some(1));
    let line = stderr(&o);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["decl", "file", "kind", "message", "span"]);
    assert_eq!(v["decl"], "j.f");
    assert_eq!(v["kind"], "TypeMismatch");
    assert_eq!(v["span"]["line"], 2);
}

#[test]
fn type_of_zero() {
    let o = sizett(&["type", "examples.zero"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "exists x0. mu-diamond.Mu examples.NatF x0");
}

#[test]
fn type_with_explicit_library() {
    let lib = common::stdlib();
    let o = sizett(&["type", "-L", lib.to_str().unwrap(), "examples.natEq"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.starts_with("(x0 : Size) -> Id U"), "{s}");
}

#[test]
fn normalize_expression() {
    let o = sizett(&["normalize", "(fun x => x) tt"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "tt");
}

#[test]
fn axioms_queries() {
    let o = sizett(&["axioms", "prop-swap.swapPi"]);
    assert_eq!(stdout(&o).trim(), "{}");
    let o = sizett(&["axioms", "poly.polyExists"]);
    let s = stdout(&o);
    assert!(s.contains("axExistsPi") && s.contains("axExistsLt"), "{s}");
    let o = sizett(&["axioms", "initial-alg.fold"]);
    assert_eq!(stdout(&o).trim(), "{funext}");
}

#[test]
fn unknown_name_exits_1() {
    let o = sizett(&["axioms", "examples.nothingHere"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("UnknownName"));
}

#[test]
fn model_test_default_vectors() {
    let o = sizett(&["model-test"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("pass")).count() >= 20);
}

#[test]
fn model_test_wrong_tracker_exits_1() {
    let (_d, p) = scratch("v.txt", "track (asm (a) (K a)) (asm (b) (S b)) ((a b)) I 100\n");
    let o = sizett(&["model-test", &p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn model_test_zero_fuel_fixlaw_passes() {
    let (_d, p) = scratch("v.txt", "fixlaw (K I) a\n");
    let o = sizett(&["--fuel", "0", "model-test", &p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn model_test_malformed_exits_2() {
    let (_d, p) = scratch("v.txt", "fixlaw (K\n");
    let o = sizett(&["model-test", &p]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prelude_override() {
    let (_d, p) = scratch("pre.smltt", "def myTrue : Bool := tt\n");
    let (_d2, f) = scratch("use.smltt", "def b : Bool := myTrue\n");
    let o = Command::new(env!("CARGO_BIN_EXE_sizett"))
        .args(["check", &f])
        .env("SIZETT_PRELUDE", &p)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_sizett"))
        .args(["check", &f])
        .env("SIZETT_PRELUDE", "/nonexistent/prelude.smltt")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn exit_codes_are_deterministic() {
    let (_d, p) = scratch("d.smltt", "def a : Bool := tt\ndef b : Size := a\n");
    let runs: Vec<Output> = (0..3).map(|_| sizett(&["--json", "check", &p])).collect();
    for r in &runs {
        assert_eq!(r.status.code(), Some(1));
        assert_eq!(stderr(r), stderr(&runs[0]));
    }
}
