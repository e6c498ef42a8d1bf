#![allow(dead_code)]

use std::path::{Path, PathBuf};

use sizett::session::{LoadError, Options, Session};

pub fn stdlib() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../stdlib")
}

/// Check `src` as a file named `stem.smltt` in a scratch directory.
pub fn load_as(stem: &str, src: &str, opts: Options) -> Result<Session, LoadError> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(format!("{stem}.smltt"));
    std::fs::write(&path, src).unwrap();
    let mut s = Session::new(opts)?;
    s.load_file(&path)?;
    Ok(s)
}

pub fn load(src: &str) -> Result<Session, LoadError> {
    load_as("t", src, Options::default())
}

// Bounded quantifiers against their hand-written expansions.
const SUGAR: [(&str, &str); 10] = [
    ("C j", "C j"),
    ("Bool", "Bool"),
    ("C j -> C j", "C j -> C j"),
    ("(x : Bool) ** C j", "(x : Bool) ** C j"),
    ("j <= i", "j <= i"),
    ("forall k < j. C k", "forall k. ^k <= j -> C k"),
    ("exists k. D j k", "exists k. D j k"),
    ("D i j", "D i j"),
    ("exists k < ^j. D k j", "exists k. (^k <= ^j) ** D k j"),
    ("C (^j)", "C (^j)"),
];

pub fn sugar_pairs() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (n, (body, manual)) in SUGAR.iter().enumerate() {
        let bound = if n % 2 == 0 { "i" } else { "^i" };
        out.push((
            format!("forall j < {bound}. {body}"),
            format!("forall j. ^j <= {bound} -> ({manual})"),
        ));
        out.push((
            format!("exists j < {bound}. {body}"),
            format!("exists j. (^j <= {bound}) ** ({manual})"),
        ));
    }
    out
}

/// Each pair as `s`/`m` definitions plus identity maps both ways, so the
/// file checks only if the two sides are definitionally equal.
pub fn sugar_source(pairs: &[(String, String)]) -> String {
    let params = "(i : Size) (C : Size -> U) (D : Size -> Size -> U)";
    let mut src = String::new();
    for (n, (sugar, manual)) in pairs.iter().enumerate() {
        src += &format!("def s{n} {params} : U := {sugar}\n");
        src += &format!("def m{n} {params} : U := {manual}\n");
        src += &format!("def to{n} {params} (x : s{n} i C D) : m{n} i C D := x\n");
        src += &format!("def from{n} {params} (x : {manual}) : {sugar} := x\n");
    }
    src
}
