//! Core syntax: locally indexed terms of the sized type theory.
//!
//! Variables are de Bruijn indices and binders carry no names, so
//! α-equivalence is plain structural equality. Every binder position is
//! recorded by [`Term::children`], which drives all generic traversals.

use std::fmt;
use std::sync::Arc;

/// Global names (prelude constants, axioms and user definitions).
pub type Name = Arc<str>;

/// Shared pointer to a term. Closures in the semantic domain keep terms
/// alive through these, so sub-terms are never copied during evaluation.
pub type Tm = Arc<Term>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    /// Reference to a global: a prelude primitive, an axiom, or a definition.
    Const(Name),

    U,
    El(Tm),

    Pi(Tm, Tm),
    Lam(Tm),
    App(Tm, Tm),

    Sigma(Tm, Tm),
    Pair(Tm, Tm),
    Proj1(Tm),
    Proj2(Tm),

    Id(Tm, Tm, Tm),
    Refl(Tm),
    /// Path induction. The motive binds `x y q`, the base binds `x`.
    J {
        motive: Tm,
        base: Tm,
        lhs: Tm,
        rhs: Tm,
        path: Tm,
    },

    Bot,
    BotInd {
        motive: Tm,
        scrut: Tm,
    },
    Top,
    Star,
    TopInd {
        motive: Tm,
        base: Tm,
        scrut: Tm,
    },
    Bool,
    Tt,
    Ff,
    BoolInd {
        motive: Tm,
        on_tt: Tm,
        on_ff: Tm,
        scrut: Tm,
    },

    Size,
    Sz0,
    SzSuc(Tm),
    LeqCode(Tm, Tm),

    Fix(Tm),
    FixBeta(Tm),

    ExistsCode(Tm),
    ExPair(Tm, Tm),
    /// ∃-elimination. The motive binds `z`, the branch binds `i x`.
    ExInd {
        motive: Tm,
        branch: Tm,
        scrut: Tm,
    },
    ForallCode(Tm),
    ForLam(Tm),
    ForApp(Tm, Tm),

    BotCode,
    TopCode,
    BoolCode,
    PiCode(Tm, Tm),
    SigCode(Tm, Tm),
    IdCode(Tm, Tm, Tm),

    /// Type ascription `(t : A)`; erased by evaluation.
    Ann(Tm, Tm),
}

/// A top-level declaration. `body == None` is an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopLevelDecl {
    pub name: Name,
    pub declared_type: Term,
    pub body: Option<Term>,
}

impl TopLevelDecl {
    pub fn is_axiom(&self) -> bool {
        self.body.is_none()
    }
}

pub fn tm(t: Term) -> Tm {
    Arc::new(t)
}

impl Term {
    pub fn app(f: Term, a: Term) -> Term {
        Term::App(tm(f), tm(a))
    }

    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(tm(body))
    }

    pub fn pi(dom: Term, cod: Term) -> Term {
        Term::Pi(tm(dom), tm(cod))
    }

    pub fn el(code: Term) -> Term {
        Term::El(tm(code))
    }

    pub fn id(ty: Term, a: Term, b: Term) -> Term {
        Term::Id(tm(ty), tm(a), tm(b))
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(Name::from(name))
    }

    pub fn suc(s: Term) -> Term {
        Term::SzSuc(tm(s))
    }

    pub fn leq(i: Term, j: Term) -> Term {
        Term::LeqCode(tm(i), tm(j))
    }

    /// The size literal `n`, i.e. `n` successors of zero.
    pub fn size_lit(n: usize) -> Term {
        (0..n).fold(Term::Sz0, |s, _| Term::suc(s))
    }

    /// Immediate sub-terms, each paired with the number of binders the
    /// sub-term sits under relative to `self`.
    pub fn children(&self) -> Vec<(&Tm, usize)> {
        use Term::*;
        match self {
            Var(_) | Const(_) | U | Bot | Top | Star | Bool | Tt | Ff | Size | Sz0 | BotCode
            | TopCode | BoolCode => vec![],
            El(a) | Proj1(a) | Proj2(a) | Refl(a) | SzSuc(a) | Fix(a) | FixBeta(a) => {
                vec![(a, 0)]
            }
            Lam(b) | ExistsCode(b) | ForallCode(b) | ForLam(b) => vec![(b, 1)],
            Pi(a, b) | Sigma(a, b) | PiCode(a, b) | SigCode(a, b) => vec![(a, 0), (b, 1)],
            App(a, b) | Pair(a, b) | LeqCode(a, b) | ExPair(a, b) | ForApp(a, b) | Ann(a, b) => {
                vec![(a, 0), (b, 0)]
            }
            Id(a, b, c) | IdCode(a, b, c) => vec![(a, 0), (b, 0), (c, 0)],
            J {
                motive,
                base,
                lhs,
                rhs,
                path,
            } => vec![(motive, 3), (base, 1), (lhs, 0), (rhs, 0), (path, 0)],
            BotInd { motive, scrut } => vec![(motive, 1), (scrut, 0)],
            TopInd {
                motive,
                base,
                scrut,
            } => vec![(motive, 1), (base, 0), (scrut, 0)],
            BoolInd {
                motive,
                on_tt,
                on_ff,
                scrut,
            } => vec![(motive, 1), (on_tt, 0), (on_ff, 0), (scrut, 0)],
            ExInd {
                motive,
                branch,
                scrut,
            } => vec![(motive, 1), (branch, 2), (scrut, 0)],
        }
    }

    /// Rebuild `self` with every immediate sub-term replaced by
    /// `f(child, binders)`. Children are visited in [`Term::children`] order.
    pub fn map_children(&self, mut f: impl FnMut(&Tm, usize) -> Term) -> Term {
        use Term::*;
        let mut g = |t: &Tm, k: usize| tm(f(t, k));
        match self {
            Var(_) | Const(_) | U | Bot | Top | Star | Bool | Tt | Ff | Size | Sz0 | BotCode
            | TopCode | BoolCode => self.clone(),
            El(a) => El(g(a, 0)),
            Proj1(a) => Proj1(g(a, 0)),
            Proj2(a) => Proj2(g(a, 0)),
            Refl(a) => Refl(g(a, 0)),
            SzSuc(a) => SzSuc(g(a, 0)),
            Fix(a) => Fix(g(a, 0)),
            FixBeta(a) => FixBeta(g(a, 0)),
            Lam(b) => Lam(g(b, 1)),
            ExistsCode(b) => ExistsCode(g(b, 1)),
            ForallCode(b) => ForallCode(g(b, 1)),
            ForLam(b) => ForLam(g(b, 1)),
            Pi(a, b) => {
                let a = g(a, 0);
                Pi(a, g(b, 1))
            }
            Sigma(a, b) => {
                let a = g(a, 0);
                Sigma(a, g(b, 1))
            }
            PiCode(a, b) => {
                let a = g(a, 0);
                PiCode(a, g(b, 1))
            }
            SigCode(a, b) => {
                let a = g(a, 0);
                SigCode(a, g(b, 1))
            }
            App(a, b) => {
                let a = g(a, 0);
                App(a, g(b, 0))
            }
            Pair(a, b) => {
                let a = g(a, 0);
                Pair(a, g(b, 0))
            }
            LeqCode(a, b) => {
                let a = g(a, 0);
                LeqCode(a, g(b, 0))
            }
            ExPair(a, b) => {
                let a = g(a, 0);
                ExPair(a, g(b, 0))
            }
            ForApp(a, b) => {
                let a = g(a, 0);
                ForApp(a, g(b, 0))
            }
            Ann(a, b) => {
                let a = g(a, 0);
                Ann(a, g(b, 0))
            }
            Id(a, b, c) => {
                let a = g(a, 0);
                let b = g(b, 0);
                Id(a, b, g(c, 0))
            }
            IdCode(a, b, c) => {
                let a = g(a, 0);
                let b = g(b, 0);
                IdCode(a, b, g(c, 0))
            }
            J {
                motive,
                base,
                lhs,
                rhs,
                path,
            } => {
                let motive = g(motive, 3);
                let base = g(base, 1);
                let lhs = g(lhs, 0);
                let rhs = g(rhs, 0);
                J {
                    motive,
                    base,
                    lhs,
                    rhs,
                    path: g(path, 0),
                }
            }
            BotInd { motive, scrut } => {
                let motive = g(motive, 1);
                BotInd {
                    motive,
                    scrut: g(scrut, 0),
                }
            }
            TopInd {
                motive,
                base,
                scrut,
            } => {
                let motive = g(motive, 1);
                let base = g(base, 0);
                TopInd {
                    motive,
                    base,
                    scrut: g(scrut, 0),
                }
            }
            BoolInd {
                motive,
                on_tt,
                on_ff,
                scrut,
            } => {
                let motive = g(motive, 1);
                let on_tt = g(on_tt, 0);
                let on_ff = g(on_ff, 0);
                BoolInd {
                    motive,
                    on_tt,
                    on_ff,
                    scrut: g(scrut, 0),
                }
            }
            ExInd {
                motive,
                branch,
                scrut,
            } => {
                let motive = g(motive, 1);
                let branch = g(branch, 2);
                ExInd {
                    motive,
                    branch,
                    scrut: g(scrut, 0),
                }
            }
        }
    }

    /// True iff every variable index is below the number of enclosing
    /// binders, starting from `depth` binders in scope.
    pub fn is_well_scoped(&self, depth: usize) -> bool {
        match self {
            Term::Var(i) => *i < depth,
            _ => self
                .children()
                .into_iter()
                .all(|(c, k)| c.is_well_scoped(depth + k)),
        }
    }

    /// Does index `idx` (relative to `self`) occur free?
    pub fn mentions(&self, idx: usize) -> bool {
        match self {
            Term::Var(i) => *i == idx,
            _ => self
                .children()
                .into_iter()
                .any(|(c, k)| c.mentions(idx + k)),
        }
    }

    /// Collect the names of all globals referenced by `self`.
    pub fn constants(&self, out: &mut Vec<Name>) {
        if let Term::Const(n) = self {
            out.push(n.clone());
        }
        for (c, _) in self.children() {
            c.constants(out);
        }
    }

    pub fn size(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(|(c, _)| c.size())
            .sum::<usize>()
    }
}

/// Rewrite free variables: `f(index, binders_passed)` is called for every
/// variable whose index is at least the number of binders passed.
fn map_free(t: &Term, under: usize, f: &mut impl FnMut(usize, usize) -> Term) -> Term {
    match t {
        Term::Var(i) if *i >= under => f(*i, under),
        Term::Var(_) => t.clone(),
        _ => t.map_children(|c, k| map_free(c, under + k, f)),
    }
}

/// Shift every free index `>= cutoff` up by `amount`.
pub fn weaken(t: &Term, cutoff: usize, amount: usize) -> Term {
    if amount == 0 {
        return t.clone();
    }
    map_free(t, cutoff, &mut |i, _| Term::Var(i + amount))
}

/// Substitute `s` for index 0 of `t`, decrementing the other free indices.
pub fn subst_top(t: &Term, s: &Term) -> Term {
    map_free(t, 0, &mut |i, under| {
        if i == under {
            weaken(s, 0, under)
        } else {
            Term::Var(i - 1)
        }
    })
}

/// α-equivalence. Binders are nameless, so this is structural equality.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::frontend::print::print_term(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Term::*;

    #[test]
    fn weaken_examples() {
        assert_eq!(weaken(&Var(0), 0, 1), Var(1));
        assert_eq!(weaken(&Term::lam(Var(0)), 0, 5), Term::lam(Var(0)));
        assert_eq!(
            weaken(&Term::lam(Term::app(Var(0), Var(1))), 0, 2),
            Term::lam(Term::app(Var(0), Var(3)))
        );
    }

    #[test]
    fn subst_examples() {
        assert_eq!(subst_top(&Var(0), &Tt), Tt);
        assert_eq!(subst_top(&Term::lam(Var(1)), &Tt), Term::lam(Tt));
        assert_eq!(subst_top(&Term::app(Var(0), Var(1)), &Star), Term::app(Star, Var(0)));
    }

    #[test]
    fn subst_weakens_replacement_under_binders() {
        // (λ. #1) [#0 := #0] at depth 1 → λ. #1
        assert_eq!(subst_top(&Term::lam(Var(1)), &Var(0)), Term::lam(Var(1)));
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_eq(&Term::lam(Var(0)), &Term::lam(Var(0))));
        assert!(!alpha_eq(&Sz0, &Term::suc(Sz0)));
        assert!(alpha_eq(
            &ExPair(tm(Sz0), tm(Tt)),
            &ExPair(tm(Sz0), tm(Tt))
        ));
    }

    #[test]
    fn scoping() {
        assert!(Term::lam(Var(0)).is_well_scoped(0));
        assert!(!Term::lam(Var(1)).is_well_scoped(0));
        let j = J {
            motive: tm(Var(2)),
            base: tm(Var(0)),
            lhs: tm(Tt),
            rhs: tm(Tt),
            path: tm(Refl(tm(Tt))),
        };
        assert!(j.is_well_scoped(0));
    }
}
