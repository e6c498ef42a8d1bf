//! Test-vector files for the model oracle.
//!
//! One check per line; `#` starts a comment. Terms are s-expressions over
//! `S K I Pr Pr1 Pr2 FIX PHI`, atoms (any other word), application lists
//! `(f a b)` and abstraction `(lam x t)`. The trailing fuel may be omitted,
//! in which case the command-line fuel applies.
//!
//! ```text
//! fixlaw <f> <a> [fuel]
//! phi <fr> <gr> <n> [fuel]
//! track <asm> <asm> <table> <tracker> [fuel]
//! universal <max-elements> <max-tokens>
//! ```
//!
//! An assembly is `(asm (x y ...) (r x) (r' y) ...)`, a table `((x u) (y v))`.

use std::fmt;

use super::assembly::{check_tracking, check_universal_property, FiniteAssembly, TrackedMorphism};
use super::pca::{bracket, check_fix_law, check_phi_law, pca_fix, phi_realiser, Cl};

pub const DEFAULT_VECTORS: &str = include_str!("default_vectors.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sexp {
    Word(String),
    List(Vec<Sexp>),
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Word(w) => write!(f, "{w}"),
            Sexp::List(xs) => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn read_line(line: &str) -> Result<Vec<Sexp>, String> {
    let spaced = line.replace('(', " ( ").replace(')', " ) ");
    let mut stack: Vec<Vec<Sexp>> = vec![Vec::new()];
    for tok in spaced.split_whitespace() {
        match tok {
            "(" => stack.push(Vec::new()),
            ")" => {
                let done = stack.pop().filter(|_| !stack.is_empty()).ok_or("unbalanced `)`")?;
                stack.last_mut().unwrap().push(Sexp::List(done));
            }
            w => stack.last_mut().unwrap().push(Sexp::Word(w.to_string())),
        }
    }
    if stack.len() != 1 {
        return Err("unbalanced `(`".into());
    }
    Ok(stack.pop().unwrap())
}

fn term(s: &Sexp) -> Result<Cl, String> {
    match s {
        Sexp::Word(w) => Ok(match w.as_str() {
            "S" => Cl::S,
            "K" => Cl::K,
            "I" => Cl::id(),
            "Pr" => Cl::Pr,
            "Pr1" => Cl::Pr1,
            "Pr2" => Cl::Pr2,
            "FIX" => pca_fix(),
            "PHI" => phi_realiser(),
            "lam" => return Err("`lam` outside an abstraction".into()),
            a => Cl::atom(a),
        }),
        Sexp::List(xs) => match xs.as_slice() {
            [] => Err("empty application".into()),
            [Sexp::Word(l), Sexp::Word(x), body] if l == "lam" => Ok(bracket(x, &term(body)?)),
            [f, args @ ..] => Ok(Cl::apps(term(f)?, args.iter().map(term).collect::<Result<Vec<_>, _>>()?)),
        },
    }
}

fn word(s: &Sexp) -> Result<&str, String> {
    match s {
        Sexp::Word(w) => Ok(w),
        Sexp::List(_) => Err(format!("expected a word, found {s}")),
    }
}

fn assembly(s: &Sexp) -> Result<FiniteAssembly, String> {
    let Sexp::List(xs) = s else {
        return Err(format!("expected an assembly, found {s}"));
    };
    let [Sexp::Word(head), Sexp::List(carrier), rel @ ..] = xs.as_slice() else {
        return Err(format!("expected (asm (elements) (realiser element)...), found {s}"));
    };
    if head != "asm" {
        return Err(format!("expected `asm`, found `{head}`"));
    }
    let carrier: Vec<String> = carrier.iter().map(|c| word(c).map(str::to_string)).collect::<Result<_, _>>()?;
    let mut realisers = Vec::new();
    for r in rel {
        let Sexp::List(pair) = r else {
            return Err(format!("expected (realiser element), found {r}"));
        };
        let [t, x] = pair.as_slice() else {
            return Err(format!("expected (realiser element), found {r}"));
        };
        let x = word(x)?;
        let i = carrier.iter().position(|c| c == x).ok_or(format!("unknown element `{x}`"))?;
        realisers.push((term(t)?, i));
    }
    FiniteAssembly::new(carrier, realisers)
}

fn table(s: &Sexp, a: &FiniteAssembly, b: &FiniteAssembly) -> Result<Vec<usize>, String> {
    let Sexp::List(rows) = s else {
        return Err(format!("expected a table, found {s}"));
    };
    let mut out = vec![None; a.carrier.len()];
    for r in rows {
        let Sexp::List(pair) = r else {
            return Err(format!("expected (element image), found {r}"));
        };
        let [x, y] = pair.as_slice() else {
            return Err(format!("expected (element image), found {r}"));
        };
        let (x, y) = (word(x)?, word(y)?);
        let i = a.index(x).ok_or(format!("unknown source element `{x}`"))?;
        let j = b.index(y).ok_or(format!("unknown target element `{y}`"))?;
        out[i] = Some(j);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, y)| y.ok_or(format!("table misses element `{}`", a.carrier[i])))
        .collect()
}

fn number(s: &Sexp) -> Result<u64, String> {
    word(s)?.parse().map_err(|_| format!("expected a number, found {s}"))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Vector {
    FixLaw { f: Cl, a: Cl, fuel: Option<u64> },
    Phi { fr: Cl, gr: Cl, n: Cl, fuel: Option<u64> },
    Track { a: FiniteAssembly, b: FiniteAssembly, table: Vec<usize>, tracker: Cl, fuel: Option<u64> },
    Universal { elems: usize, tokens: usize },
}

impl Vector {
    pub fn kind(&self) -> &'static str {
        match self {
            Vector::FixLaw { .. } => "fixlaw",
            Vector::Phi { .. } => "phi",
            Vector::Track { .. } => "track",
            Vector::Universal { .. } => "universal",
        }
    }
}

fn fuel(rest: &[Sexp]) -> Result<Option<u64>, String> {
    match rest {
        [] => Ok(None),
        [n] => number(n).map(Some),
        _ => Err("too many fields".into()),
    }
}

fn vector(fields: &[Sexp]) -> Result<Vector, String> {
    let Some((cmd, args)) = fields.split_first() else {
        return Err("empty vector".into());
    };
    match (word(cmd)?, args) {
        ("fixlaw", [f, a, rest @ ..]) => Ok(Vector::FixLaw {
            f: term(f)?,
            a: term(a)?,
            fuel: fuel(rest)?,
        }),
        ("phi", [fr, gr, n, rest @ ..]) => Ok(Vector::Phi {
            fr: term(fr)?,
            gr: term(gr)?,
            n: term(n)?,
            fuel: fuel(rest)?,
        }),
        ("track", [a, b, t, e, rest @ ..]) => {
            let (a, b) = (assembly(a)?, assembly(b)?);
            let table = table(t, &a, &b)?;
            Ok(Vector::Track {
                a,
                b,
                table,
                tracker: term(e)?,
                fuel: fuel(rest)?,
            })
        }
        ("universal", [e, t]) => {
            let (elems, tokens) = (number(e)? as usize, number(t)? as usize);
            if elems > 3 || tokens > 3 {
                return Err("universal checks are limited to 3 elements and 3 tokens".into());
            }
            Ok(Vector::Universal { elems, tokens })
        }
        (c @ ("fixlaw" | "phi" | "track" | "universal"), _) => Err(format!("wrong number of fields for `{c}`")),
        (c, _) => Err(format!("unknown check `{c}`")),
    }
}

/// Parse a vector file; errors carry the line number.
pub fn parse(text: &str) -> Result<Vec<Vector>, String> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let v = read_line(line).and_then(|f| vector(&f)).map_err(|e| format!("line {}: {e}", n + 1))?;
        out.push(v);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorResult {
    pub pass: bool,
    pub detail: String,
}

/// Run one vector; `default_fuel` applies when the vector names none.
pub fn run(v: &Vector, default_fuel: u64) -> VectorResult {
    let (pass, detail) = match v {
        Vector::FixLaw { f, a, fuel } => {
            let fuel = fuel.unwrap_or(default_fuel);
            (check_fix_law(f, a, fuel), format!("fix {f} {a} at fuel {fuel}"))
        }
        Vector::Phi { fr, gr, n, fuel } => {
            let fuel = fuel.unwrap_or(default_fuel);
            (check_phi_law(fr, gr, n, fuel), format!("F {fr} {gr} {n} at fuel {fuel}"))
        }
        Vector::Track { a, b, table, tracker, fuel } => {
            let m = TrackedMorphism {
                table: table.clone(),
                tracker: tracker.clone(),
                fuel: fuel.unwrap_or(default_fuel),
            };
            (check_tracking(a, b, &m), format!("tracker {tracker}"))
        }
        Vector::Universal { elems, tokens } => {
            let r = check_universal_property(*elems, *tokens);
            let detail = match r.failures.first() {
                None => format!("{} assemblies, {} tracked morphisms", r.assemblies, r.morphisms),
                Some(f) => f.clone(),
            };
            (r.failures.is_empty(), detail)
        }
    };
    VectorResult { pass, detail }
}
