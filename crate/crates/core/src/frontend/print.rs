//! Printing core terms as parseable surface syntax.
//!
//! Bound variables are named after their level (`x0`, `x1`, ...). The
//! printer mirrors the elaborator's modes and inserts `El`, `type` or `!`
//! wherever a node would otherwise elaborate differently, so printing and
//! re-elaborating gives back the same term.

use crate::kernel::FUNEXT;
use crate::syntax::Term;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Type,
    Term,
}

// Precedence levels, loosest first.
const EXPR: u8 = 0;
const PROD: u8 = 1;
const CMP: u8 = 2;
const APP: u8 = 3;
const ATOM: u8 = 4;

/// Print a closed term in term position.
pub fn print_term(t: &Term) -> String {
    print_term_in(t, 0)
}

/// Print a term in term position under `depth` binders named by level.
pub fn print_term_in(t: &Term, depth: usize) -> String {
    at(t, Mode::Term, depth, EXPR)
}

pub fn print_type(t: &Term) -> String {
    print_type_in(t, 0)
}

pub fn print_type_in(t: &Term, depth: usize) -> String {
    at(t, Mode::Type, depth, EXPR)
}

/// Re-insert the `El` that readback drops around ∃, ∀ and ≤ codes (they
/// evaluate to themselves), so types read back from values print plainly.
pub fn restore_el(t: &Term) -> Term {
    use crate::syntax::tm;
    match t {
        Term::ExistsCode(_) | Term::ForallCode(_) | Term::LeqCode(..) => Term::el(t.clone()),
        Term::Pi(a, b) => Term::Pi(tm(restore_el(a)), tm(restore_el(b))),
        Term::Sigma(a, b) => Term::Sigma(tm(restore_el(a)), tm(restore_el(b))),
        Term::Id(a, x, y) => Term::Id(tm(restore_el(a)), x.clone(), y.clone()),
        _ => t.clone(),
    }
}

pub fn var_name(level: usize) -> String {
    format!("x{level}")
}

fn at(t: &Term, mode: Mode, d: usize, prec: u8) -> String {
    let (s, lvl) = go(t, mode, d);
    if lvl < prec {
        format!("({s})")
    } else {
        s
    }
}

fn atom(t: &Term, mode: Mode, d: usize) -> String {
    at(t, mode, d, ATOM)
}

fn is_large(t: &Term) -> bool {
    matches!(
        t,
        Term::U
            | Term::Size
            | Term::Pi(..)
            | Term::Sigma(..)
            | Term::Id(..)
            | Term::Bot
            | Term::Top
            | Term::Bool
            | Term::El(_)
    )
}

/// Codes whose term-mode spelling is a large former in type position.
fn prints_as_former(c: &Term) -> bool {
    is_large(c)
        || matches!(
            c,
            Term::BotCode
                | Term::TopCode
                | Term::BoolCode
                | Term::PiCode(..)
                | Term::SigCode(..)
                | Term::IdCode(..)
        )
}

fn binder(prefix: &str, d: usize, body: &Term, mode: Mode, prec: u8) -> String {
    format!("{prefix}{} => {}", var_name(d), at(body, mode, d + 1, prec))
}

fn go(t: &Term, mode: Mode, d: usize) -> (String, u8) {
    if mode == Mode::Type {
        return go_type(t, d);
    }
    let tm = Mode::Term;
    let ty = Mode::Type;
    match t {
        Term::Var(i) if *i < d => (var_name(d - 1 - i), ATOM),
        Term::Var(i) => (format!("#{i}"), ATOM),
        Term::Const(n) => (n.to_string(), ATOM),
        _ if is_large(t) => (format!("type {}", atom(t, ty, d)), APP),
        Term::Lam(b) => (binder("fun ", d, b, tm, EXPR), EXPR),
        Term::ForLam(b) => (binder("fun^ ", d, b, tm, EXPR), EXPR),
        Term::App(..) => {
            let mut spine = Vec::new();
            let mut head = t;
            while let Term::App(f, a) = head {
                spine.push(&**a);
                head = f;
            }
            spine.reverse();
            let funext = matches!(head, Term::Const(n) if &**n == FUNEXT);
            let mut s = at(head, tm, d, APP);
            for (k, a) in spine.into_iter().enumerate() {
                s.push(' ');
                s.push_str(&atom(a, if funext && k == 0 { ty } else { tm }, d));
            }
            (s, APP)
        }
        Term::ForApp(f, s) => (format!("{} {{{}}}", at(f, tm, d, APP), at(s, tm, d, EXPR)), APP),
        Term::Pair(a, b) => (format!("({}, {})", at(a, tm, d, EXPR), at(b, tm, d, EXPR)), ATOM),
        Term::Proj1(p) => (format!("{}.1", atom(p, tm, d)), ATOM),
        Term::Proj2(p) => (format!("{}.2", atom(p, tm, d)), ATOM),
        Term::Refl(x) => (format!("refl {}", atom(x, tm, d)), APP),
        Term::J {
            motive,
            base,
            lhs,
            rhs,
            path,
        } => (
            format!(
                "J ({} {} {}. {}) ({}. {}) {} {} {}",
                var_name(d),
                var_name(d + 1),
                var_name(d + 2),
                at(motive, ty, d + 3, EXPR),
                var_name(d),
                at(base, tm, d + 1, EXPR),
                atom(lhs, tm, d),
                atom(rhs, tm, d),
                atom(path, tm, d)
            ),
            APP,
        ),
        Term::BotInd { motive, scrut } => (
            format!(
                "botind ({}. {}) {}",
                var_name(d),
                at(motive, ty, d + 1, EXPR),
                atom(scrut, tm, d)
            ),
            APP,
        ),
        Term::TopInd {
            motive,
            base,
            scrut,
        } => (
            format!(
                "topind ({}. {}) {} {}",
                var_name(d),
                at(motive, ty, d + 1, EXPR),
                atom(base, tm, d),
                atom(scrut, tm, d)
            ),
            APP,
        ),
        Term::BoolInd {
            motive,
            on_tt,
            on_ff,
            scrut,
        } => (
            format!(
                "boolind ({}. {}) {} {} {}",
                var_name(d),
                at(motive, ty, d + 1, EXPR),
                atom(on_tt, tm, d),
                atom(on_ff, tm, d),
                atom(scrut, tm, d)
            ),
            APP,
        ),
        Term::ExInd {
            motive,
            branch,
            scrut,
        } => (
            format!(
                "exind ({}. {}) ({} {}. {}) {}",
                var_name(d),
                at(motive, tm, d + 1, EXPR),
                var_name(d),
                var_name(d + 1),
                at(branch, tm, d + 2, EXPR),
                atom(scrut, tm, d)
            ),
            APP,
        ),
        Term::Star => ("star".into(), ATOM),
        Term::Tt => ("tt".into(), ATOM),
        Term::Ff => ("ff".into(), ATOM),
        Term::Sz0 => ("0s".into(), ATOM),
        Term::SzSuc(s) => (format!("^{}", atom(s, tm, d)), APP),
        Term::LeqCode(i, j) => (format!("{} <= {}", at(i, tm, d, APP), at(j, tm, d, APP)), CMP),
        Term::Fix(f) => (format!("fix {}", atom(f, tm, d)), APP),
        Term::FixBeta(f) => (format!("fixb {}", atom(f, tm, d)), APP),
        Term::ExistsCode(b) => (
            format!("exists {}. {}", var_name(d), at(b, tm, d + 1, EXPR)),
            EXPR,
        ),
        Term::ForallCode(b) => (
            format!("forall {}. {}", var_name(d), at(b, tm, d + 1, EXPR)),
            EXPR,
        ),
        Term::ExPair(s, a) => (format!("expair {} {}", atom(s, tm, d), atom(a, tm, d)), APP),
        Term::BotCode => ("Bot".into(), ATOM),
        Term::TopCode => ("Top".into(), ATOM),
        Term::BoolCode => ("Bool".into(), ATOM),
        Term::PiCode(a, b) => pi_like("->", a, b, tm, d),
        Term::SigCode(a, b) => pi_like("**", a, b, tm, d),
        Term::IdCode(a, x, y) => (
            format!("Id {} {} {}", atom(a, tm, d), atom(x, tm, d), atom(y, tm, d)),
            APP,
        ),
        Term::Ann(x, t) => (format!("({} : {})", at(x, tm, d, EXPR), at(t, ty, d, EXPR)), ATOM),
        Term::U
        | Term::Size
        | Term::Pi(..)
        | Term::Sigma(..)
        | Term::Id(..)
        | Term::Bot
        | Term::Top
        | Term::Bool
        | Term::El(_) => unreachable!("large formers handled above"),
    }
}

fn pi_like(op: &str, a: &Term, b: &Term, mode: Mode, d: usize) -> (String, u8) {
    let (body_prec, lvl) = if op == "->" { (EXPR, EXPR) } else { (PROD, PROD) };
    (
        format!(
            "({} : {}) {op} {}",
            var_name(d),
            at(a, mode, d, EXPR),
            at(b, mode, d + 1, body_prec)
        ),
        lvl,
    )
}

fn go_type(t: &Term, d: usize) -> (String, u8) {
    let ty = Mode::Type;
    match t {
        Term::U => ("U".into(), ATOM),
        Term::Size => ("Size".into(), ATOM),
        Term::Bool => ("Bool".into(), ATOM),
        Term::Top => ("Top".into(), ATOM),
        Term::Bot => ("Bot".into(), ATOM),
        Term::Pi(a, b) => pi_like("->", a, b, ty, d),
        Term::Sigma(a, b) => pi_like("**", a, b, ty, d),
        Term::Id(a, x, y) => (
            format!(
                "Id {} {} {}",
                atom(a, ty, d),
                atom(x, Mode::Term, d),
                atom(y, Mode::Term, d)
            ),
            APP,
        ),
        Term::El(c) if prints_as_former(c) => (format!("El {}", atom(c, Mode::Term, d)), APP),
        Term::El(c) => go(c, Mode::Term, d),
        _ => (format!("! {}", atom(t, Mode::Term, d)), APP),
    }
}
