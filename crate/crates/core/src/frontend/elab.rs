//! Elaboration from named surface syntax to core terms.
//!
//! Elaboration is directed by position. In a type position the formers
//! `Bool`, `(x : A) -> B`, `Id A a b` and so on are the large types, and any
//! other expression is a code that gets wrapped in `El`. In a term position
//! the same formers denote their codes in `U`. `type T` and `! t` escape
//! from one mode into the other.

use thiserror::Error;

use super::lexer::Pos;
use super::surface::{Binder, Expr, Param};
use crate::kernel::FUNEXT;
use crate::syntax::{tm, weaken, Name, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElabError {
    #[error("{pos}: unbound identifier `{name}`")]
    UnboundIdentifier { name: String, pos: PosDisplay },
    #[error("{0}")]
    ElaborationAmbiguity(String),
}

/// Position wrapper with a `line:col` display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosDisplay(pub Pos);

impl std::fmt::Display for PosDisplay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.0.line, self.0.col)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Type,
    Term,
}

type Result<T> = std::result::Result<T, ElabError>;

/// Resolves a global identifier to its qualified name.
pub trait Resolve {
    fn resolve(&self, name: &str) -> Option<Name>;
}

impl<F: Fn(&str) -> Option<Name>> Resolve for F {
    fn resolve(&self, name: &str) -> Option<Name> {
        self(name)
    }
}

pub struct Elab<'a> {
    globals: &'a dyn Resolve,
    locals: Vec<String>,
}

const HIDDEN: &str = "_";

impl<'a> Elab<'a> {
    pub fn new(globals: &'a dyn Resolve) -> Self {
        Elab {
            globals,
            locals: Vec::new(),
        }
    }

    /// Start under the given local binders, outermost first.
    pub fn with_locals(mut self, names: &[String]) -> Self {
        self.locals = names.to_vec();
        self
    }

    fn with<T>(&mut self, names: &[String], f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        let n = self.locals.len();
        self.locals.extend(names.iter().cloned());
        let r = f(self);
        self.locals.truncate(n);
        r
    }

    fn with_hidden<T>(&mut self, k: usize, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.with(&vec![HIDDEN.to_string(); k], f)
    }

    fn ident(&self, name: &str, pos: Pos) -> Result<Term> {
        if name != HIDDEN {
            if let Some(k) = self.locals.iter().rev().position(|n| n == name) {
                return Ok(Term::Var(k));
            }
            if let Some(q) = self.globals.resolve(name) {
                return Ok(Term::Const(q));
            }
        }
        Err(ElabError::UnboundIdentifier {
            name: name.to_string(),
            pos: PosDisplay(pos),
        })
    }

    fn is_global(&self, e: &Expr, global: &str) -> bool {
        match e {
            Expr::Ident(n, _) => {
                !self.locals.iter().any(|l| l == n)
                    && self.globals.resolve(n).is_some_and(|q| &*q == global)
            }
            _ => false,
        }
    }

    /// Elaborate a declaration: parameters become Π binders in the type and
    /// λ binders in the body.
    pub fn decl(&mut self, params: &[Param], ty: &Expr, body: Option<&Expr>) -> Result<(Term, Option<Term>)> {
        let names: Vec<String> = params.iter().flat_map(|p| p.names.iter().cloned()).collect();
        let ty = self.telescope_type(params, ty)?;
        let body = match body {
            Some(b) => Some(self.with(&names, |s| s.elab(b, Mode::Term))?),
            None => None,
        };
        let body = body.map(|b| names.iter().fold(b, |b, _| Term::lam(b)));
        Ok((ty, body))
    }

    fn telescope_type(&mut self, params: &[Param], ty: &Expr) -> Result<Term> {
        let Some((first, rest)) = params.split_first() else {
            return self.elab(ty, Mode::Type);
        };
        let dom = self.elab(&first.ty, Mode::Type)?;
        let body = self.with(&first.names, |s| s.telescope_type(rest, ty))?;
        Ok(nest(&dom, first.names.len(), body, |a, b| Term::Pi(tm(a), tm(b))))
    }

    pub fn elab(&mut self, e: &Expr, mode: Mode) -> Result<Term> {
        let code = |t: Term, large: Term| if mode == Mode::Type { large } else { t };
        Ok(match e {
            Expr::Univ | Expr::SizeTy if mode == Mode::Term => {
                return Err(ElabError::ElaborationAmbiguity(format!(
                    "`{}` is a large type with no code; write `type {0}` to use it as a term",
                    if *e == Expr::Univ { "U" } else { "Size" }
                )))
            }
            Expr::Univ => Term::U,
            Expr::SizeTy => Term::Size,
            Expr::BoolTy => code(Term::BoolCode, Term::Bool),
            Expr::TopTy => code(Term::TopCode, Term::Top),
            Expr::BotTy => code(Term::BotCode, Term::Bot),
            Expr::El(c) => {
                if mode == Mode::Term {
                    return Err(ElabError::ElaborationAmbiguity(
                        "`El` in a term position; the code itself is meant here, or use `type (El c)`"
                            .into(),
                    ));
                }
                Term::el(self.elab(c, Mode::Term)?)
            }
            Expr::TypeEsc(t) => self.elab(t, Mode::Type)?,
            Expr::Raw(t) => self.elab(t, Mode::Term)?,
            Expr::Pi(names, a, b) => {
                let dom = self.elab(a, mode)?;
                let (k, body) = self.bind_names(names, |s| s.elab(b, mode))?;
                nest(&dom, k, body, |a, b| {
                    if mode == Mode::Type {
                        Term::Pi(tm(a), tm(b))
                    } else {
                        Term::PiCode(tm(a), tm(b))
                    }
                })
            }
            Expr::Sigma(names, a, b) => {
                let dom = self.elab(a, mode)?;
                let (k, body) = self.bind_names(names, |s| s.elab(b, mode))?;
                nest(&dom, k, body, |a, b| {
                    if mode == Mode::Type {
                        Term::Sigma(tm(a), tm(b))
                    } else {
                        Term::SigCode(tm(a), tm(b))
                    }
                })
            }
            Expr::Id(a, x, y) => {
                let (a, x, y) = (self.elab(a, mode)?, self.elab(x, Mode::Term)?, self.elab(y, Mode::Term)?);
                if mode == Mode::Type {
                    Term::id(a, x, y)
                } else {
                    Term::IdCode(tm(a), tm(x), tm(y))
                }
            }
            Expr::Forall(i, bound, body) | Expr::Exists(i, bound, body) => {
                let forall = matches!(e, Expr::Forall(..));
                let inner = match bound {
                    None => self.with(std::slice::from_ref(i), |s| s.elab(body, Mode::Term))?,
                    Some(bound) => {
                        // ∀ j < i. A  ≡  ∀ j. (↑j ≤ i) → A
                        let bound = weaken(&self.elab(bound, Mode::Term)?, 0, 1);
                        let guard = Term::leq(Term::suc(Term::Var(0)), bound);
                        let a = self.with(std::slice::from_ref(i), |s| {
                            s.with_hidden(1, |s| s.elab(body, Mode::Term))
                        })?;
                        if forall {
                            Term::PiCode(tm(guard), tm(a))
                        } else {
                            Term::SigCode(tm(guard), tm(a))
                        }
                    }
                };
                let c = if forall {
                    Term::ForallCode(tm(inner))
                } else {
                    Term::ExistsCode(tm(inner))
                };
                code(c.clone(), Term::el(c))
            }
            Expr::Leq(i, j) => {
                let c = Term::leq(self.elab(i, Mode::Term)?, self.elab(j, Mode::Term)?);
                code(c.clone(), Term::el(c))
            }
            Expr::Lt(i, j) => {
                let c = Term::leq(Term::suc(self.elab(i, Mode::Term)?), self.elab(j, Mode::Term)?);
                code(c.clone(), Term::el(c))
            }
            _ if mode == Mode::Type => Term::el(self.elab(e, Mode::Term)?),

            Expr::Ident(n, pos) => self.ident(n, *pos)?,
            Expr::Tt => Term::Tt,
            Expr::Ff => Term::Ff,
            Expr::Star => Term::Star,
            Expr::Zero => Term::Sz0,
            Expr::Num(n) => Term::size_lit(*n),
            Expr::Suc(s) => Term::suc(self.elab(s, Mode::Term)?),
            Expr::Lam(names, b) => {
                let body = self.with(names, |s| s.elab(b, Mode::Term))?;
                names.iter().fold(body, |b, _| Term::lam(b))
            }
            Expr::ForLam(names, b) => {
                let body = self.with(names, |s| s.elab(b, Mode::Term))?;
                names.iter().fold(body, |b, _| Term::ForLam(tm(b)))
            }
            Expr::App(f, a) => {
                let mut spine = vec![&**a];
                let mut head = &**f;
                while let Expr::App(g, b) = head {
                    spine.push(b);
                    head = g;
                }
                spine.reverse();
                let mut acc = self.elab(head, Mode::Term)?;
                let funext = self.is_global(head, FUNEXT);
                for (k, arg) in spine.into_iter().enumerate() {
                    let m = if funext && k == 0 { Mode::Type } else { Mode::Term };
                    acc = Term::app(acc, self.elab(arg, m)?);
                }
                acc
            }
            Expr::ForApp(f, s) => Term::ForApp(tm(self.elab(f, Mode::Term)?), tm(self.elab(s, Mode::Term)?)),
            Expr::Pair(a, b) => Term::Pair(tm(self.elab(a, Mode::Term)?), tm(self.elab(b, Mode::Term)?)),
            Expr::Proj(1, p) => Term::Proj1(tm(self.elab(p, Mode::Term)?)),
            Expr::Proj(_, p) => Term::Proj2(tm(self.elab(p, Mode::Term)?)),
            Expr::Refl(x) => Term::Refl(tm(self.elab(x, Mode::Term)?)),
            Expr::J {
                motive,
                base,
                lhs,
                rhs,
                path,
            } => Term::J {
                motive: tm(self.binder(motive, Mode::Type)?),
                base: tm(self.binder(base, Mode::Term)?),
                lhs: tm(self.elab(lhs, Mode::Term)?),
                rhs: tm(self.elab(rhs, Mode::Term)?),
                path: tm(self.elab(path, Mode::Term)?),
            },
            Expr::BotInd { motive, scrut } => Term::BotInd {
                motive: tm(self.binder(motive, Mode::Type)?),
                scrut: tm(self.elab(scrut, Mode::Term)?),
            },
            Expr::TopInd {
                motive,
                base,
                scrut,
            } => Term::TopInd {
                motive: tm(self.binder(motive, Mode::Type)?),
                base: tm(self.elab(base, Mode::Term)?),
                scrut: tm(self.elab(scrut, Mode::Term)?),
            },
            Expr::BoolInd {
                motive,
                on_tt,
                on_ff,
                scrut,
            } => Term::BoolInd {
                motive: tm(self.binder(motive, Mode::Type)?),
                on_tt: tm(self.elab(on_tt, Mode::Term)?),
                on_ff: tm(self.elab(on_ff, Mode::Term)?),
                scrut: tm(self.elab(scrut, Mode::Term)?),
            },
            // The ∃-motive is a code: the rule demands it be small.
            Expr::ExInd {
                motive,
                branch,
                scrut,
            } => Term::ExInd {
                motive: tm(self.binder(motive, Mode::Term)?),
                branch: tm(self.binder(branch, Mode::Term)?),
                scrut: tm(self.elab(scrut, Mode::Term)?),
            },
            Expr::ExPair(s, a) => Term::ExPair(tm(self.elab(s, Mode::Term)?), tm(self.elab(a, Mode::Term)?)),
            Expr::Fix(f) => Term::Fix(tm(self.elab(f, Mode::Term)?)),
            Expr::FixBeta(f) => Term::FixBeta(tm(self.elab(f, Mode::Term)?)),
            Expr::Ann(t, ty) => Term::Ann(tm(self.elab(t, Mode::Term)?), tm(self.elab(ty, Mode::Type)?)),
        })
    }

    fn binder(&mut self, b: &Binder, mode: Mode) -> Result<Term> {
        self.with(&b.names, |s| s.elab(&b.body, mode))
    }

    /// Bind a telescope's names (one hidden name if there are none).
    fn bind_names(
        &mut self,
        names: &[String],
        f: impl FnOnce(&mut Self) -> Result<Term>,
    ) -> Result<(usize, Term)> {
        if names.is_empty() {
            Ok((1, self.with_hidden(1, f)?))
        } else {
            Ok((names.len(), self.with(names, f)?))
        }
    }
}

/// `k` nested binders sharing the domain `dom` (elaborated once, outside).
fn nest(dom: &Term, k: usize, body: Term, mk: impl Fn(Term, Term) -> Term) -> Term {
    (0..k).rev().fold(body, |b, n| mk(weaken(dom, 0, n), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parser::parse_expr;

    fn no_globals(_: &str) -> Option<Name> {
        None
    }

    fn elab_with(src: &str, locals: &[&str], mode: Mode) -> Term {
        let g = no_globals;
        let mut e = Elab::new(&g);
        e.locals = locals.iter().map(|s| s.to_string()).collect();
        e.elab(&parse_expr(src).unwrap(), mode).unwrap()
    }

    #[test]
    fn bounded_forall() {
        let t = elab_with("forall j < i. Bool", &["i"], Mode::Term);
        assert_eq!(
            t,
            Term::ForallCode(tm(Term::PiCode(
                tm(Term::leq(Term::suc(Term::Var(0)), Term::Var(1))),
                tm(Term::BoolCode)
            )))
        );
    }

    #[test]
    fn bounded_exists() {
        let t = elab_with("exists j < i. Bool", &["i"], Mode::Term);
        assert_eq!(
            t,
            Term::ExistsCode(tm(Term::SigCode(
                tm(Term::leq(Term::suc(Term::Var(0)), Term::Var(1))),
                tm(Term::BoolCode)
            )))
        );
    }

    #[test]
    fn size_literal() {
        assert_eq!(elab_with("2", &[], Mode::Term), Term::size_lit(2));
        assert_eq!(elab_with("i < j", &["i", "j"], Mode::Term), Term::leq(Term::suc(Term::Var(1)), Term::Var(0)));
    }

    #[test]
    fn telescopes_weaken_domains() {
        let t = elab_with("(x y : A) -> Id A x y", &["A"], Mode::Type);
        let a = |k| Term::el(Term::Var(k));
        assert_eq!(
            t,
            Term::pi(a(0), Term::pi(a(1), Term::id(a(2), Term::Var(1), Term::Var(0))))
        );
    }

    #[test]
    fn auto_el() {
        assert_eq!(elab_with("A", &["A"], Mode::Type), Term::el(Term::Var(0)));
        assert_eq!(elab_with("A -> Bool", &["A"], Mode::Term), Term::PiCode(tm(Term::Var(0)), tm(Term::BoolCode)));
    }

    #[test]
    fn unbound() {
        let g = no_globals;
        let err = Elab::new(&g)
            .elab(&parse_expr("nope").unwrap(), Mode::Term)
            .unwrap_err();
        assert!(matches!(err, ElabError::UnboundIdentifier { .. }));
    }
}
