//! Building core terms with named (level) variables.
//!
//! The kernel synthesizes a few types itself (fix, funext, the ≤-constants).
//! Writing those with raw indices is error prone, so they are built in level
//! form and converted to indices once at the end.

use std::cell::Cell;

use crate::syntax::{tm, Term};

const MARK: usize = 1 << 48;

pub struct Build {
    base: usize,
    depth: Cell<usize>,
}

impl Build {
    /// A builder for terms that will live under `base` binders.
    pub fn new(base: usize) -> Self {
        Build {
            base,
            depth: Cell::new(base),
        }
    }

    /// Import a term that is well scoped at the base depth.
    pub fn outer(&self, t: &Term) -> Term {
        to_levels(t, 0, self.base)
    }

    fn fresh(&self, f: impl FnOnce(Term) -> Term) -> Term {
        let l = self.depth.get();
        self.depth.set(l + 1);
        let body = f(Term::Var(MARK + l));
        self.depth.set(l);
        body
    }

    pub fn pi(&self, dom: Term, f: impl FnOnce(Term) -> Term) -> Term {
        Term::Pi(tm(dom), tm(self.fresh(f)))
    }

    pub fn arrow(&self, dom: Term, cod: Term) -> Term {
        self.pi(dom, |_| cod)
    }

    pub fn sigma(&self, dom: Term, f: impl FnOnce(Term) -> Term) -> Term {
        Term::Sigma(tm(dom), tm(self.fresh(f)))
    }

    pub fn lam(&self, f: impl FnOnce(Term) -> Term) -> Term {
        Term::Lam(tm(self.fresh(f)))
    }

    pub fn for_lam(&self, f: impl FnOnce(Term) -> Term) -> Term {
        Term::ForLam(tm(self.fresh(f)))
    }

    pub fn forall_code(&self, f: impl FnOnce(Term) -> Term) -> Term {
        Term::ForallCode(tm(self.fresh(f)))
    }

    pub fn j(
        &self,
        motive: impl FnOnce(Term, Term, Term) -> Term,
        base: impl FnOnce(Term) -> Term,
        lhs: Term,
        rhs: Term,
        path: Term,
    ) -> Term {
        let motive = self.fresh(|x| self.fresh(|y| self.fresh(|q| motive(x, y, q))));
        Term::J {
            motive: tm(motive),
            base: tm(self.fresh(base)),
            lhs: tm(lhs),
            rhs: tm(rhs),
            path: tm(path),
        }
    }

    /// Convert a finished level-form term back to indices at the base depth.
    pub fn finish(&self, t: Term) -> Term {
        from_levels(&t, 0, self.base)
    }
}

fn to_levels(t: &Term, under: usize, base: usize) -> Term {
    match t {
        Term::Var(i) if *i >= under => Term::Var(MARK + base - 1 - (i - under)),
        Term::Var(_) => t.clone(),
        _ => t.map_children(|c, k| to_levels(c, under + k, base)),
    }
}

fn from_levels(t: &Term, under: usize, base: usize) -> Term {
    match t {
        Term::Var(k) if *k >= MARK => Term::Var(base + under - 1 - (k - MARK)),
        Term::Var(_) => t.clone(),
        _ => t.map_children(|c, k| from_levels(c, under + k, base)),
    }
}
