//! Random generators shared by the property tests and the acceptance run.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use sizett::syntax::{tm, weaken, Term};

/// Closed simple types the typed generator works over.
#[derive(Clone, Debug, PartialEq)]
pub enum Ty {
    Bool,
    Top,
    Size,
    Arr(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    /// ∀ i. A with A not depending on i.
    All(Box<Ty>),
    Ex(Box<Ty>),
    /// Id Bool tt tt
    IdB,
}

impl Ty {
    pub fn small(&self) -> bool {
        match self {
            Ty::Size => false,
            Ty::Arr(a, b) | Ty::Prod(a, b) => a.small() && b.small(),
            _ => true,
        }
    }

    pub fn to_type(&self) -> Term {
        match self {
            Ty::Bool => Term::Bool,
            Ty::Top => Term::Top,
            Ty::Size => Term::Size,
            Ty::Arr(a, b) => Term::pi(a.to_type(), b.to_type()),
            Ty::Prod(a, b) => Term::Sigma(tm(a.to_type()), tm(b.to_type())),
            Ty::All(_) | Ty::Ex(_) => Term::el(self.code()),
            Ty::IdB => Term::id(Term::Bool, Term::Tt, Term::Tt),
        }
    }

    /// The code of a small type.
    pub fn code(&self) -> Term {
        match self {
            Ty::Bool => Term::BoolCode,
            Ty::Top => Term::TopCode,
            Ty::Size => panic!("Size has no code"),
            Ty::Arr(a, b) => Term::PiCode(tm(a.code()), tm(b.code())),
            Ty::Prod(a, b) => Term::SigCode(tm(a.code()), tm(b.code())),
            Ty::All(a) => Term::ForallCode(tm(a.code())),
            Ty::Ex(a) => Term::ExistsCode(tm(a.code())),
            Ty::IdB => Term::IdCode(tm(Term::BoolCode), tm(Term::Tt), tm(Term::Tt)),
        }
    }
}

pub struct Gen {
    pub rng: StdRng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    pub fn ty(&mut self, depth: usize) -> Ty {
        let leaf = [Ty::Bool, Ty::Top, Ty::Size, Ty::IdB];
        if depth == 0 || self.rng.gen_bool(0.4) {
            return leaf.choose(&mut self.rng).unwrap().clone();
        }
        match self.rng.gen_range(0..4) {
            0 => Ty::Arr(Box::new(self.ty(depth - 1)), Box::new(self.ty(depth - 1))),
            1 => Ty::Prod(Box::new(self.ty(depth - 1)), Box::new(self.ty(depth - 1))),
            2 => Ty::All(Box::new(self.small_ty(depth - 1))),
            _ => Ty::Ex(Box::new(self.small_ty(depth - 1))),
        }
    }

    pub fn small_ty(&mut self, depth: usize) -> Ty {
        loop {
            let t = self.ty(depth);
            if t.small() {
                return t;
            }
        }
    }

    fn ann(&self, t: Term, ty: &Ty) -> Term {
        Term::Ann(tm(t), tm(ty.to_type()))
    }

    /// A term of type `ty` in a context of simple types (last = innermost),
    /// with β-redexes sprinkled in while `fuel` lasts.
    pub fn term(&mut self, ctx: &[Ty], ty: &Ty, fuel: usize) -> Term {
        let vars: Vec<usize> = ctx
            .iter()
            .enumerate()
            .filter(|(_, t)| *t == ty)
            .map(|(i, _)| ctx.len() - 1 - i)
            .collect();
        if !vars.is_empty() && self.rng.gen_bool(0.3) {
            return Term::Var(*vars.choose(&mut self.rng).unwrap());
        }
        if fuel > 0 && self.rng.gen_bool(0.45) {
            if let Some(t) = self.redex(ctx, ty, fuel - 1) {
                return t;
            }
        }
        self.intro(ctx, ty, fuel.saturating_sub(1))
    }

    fn intro(&mut self, ctx: &[Ty], ty: &Ty, fuel: usize) -> Term {
        let under = |ctx: &[Ty], t: Ty| {
            let mut c = ctx.to_vec();
            c.push(t);
            c
        };
        match ty {
            Ty::Bool => {
                if self.rng.gen() {
                    Term::Tt
                } else {
                    Term::Ff
                }
            }
            Ty::Top => Term::Star,
            Ty::IdB => Term::Refl(tm(Term::Tt)),
            Ty::Size => {
                if fuel == 0 || self.rng.gen_bool(0.5) {
                    Term::Sz0
                } else {
                    Term::suc(self.term(ctx, &Ty::Size, fuel))
                }
            }
            Ty::Arr(a, b) => Term::lam(self.term(&under(ctx, (**a).clone()), b, fuel)),
            Ty::Prod(a, b) => Term::Pair(tm(self.term(ctx, a, fuel)), tm(self.term(ctx, b, fuel))),
            Ty::All(a) => Term::ForLam(tm(self.term(&under(ctx, Ty::Size), a, fuel))),
            Ty::Ex(a) => Term::ExPair(tm(self.term(ctx, &Ty::Size, fuel)), tm(self.term(ctx, a, fuel))),
        }
    }

    fn redex(&mut self, ctx: &[Ty], ty: &Ty, fuel: usize) -> Option<Term> {
        let motive1 = weaken(&ty.to_type(), 0, 1);
        Some(match self.rng.gen_range(0..8) {
            0 => {
                let a = self.ty(1);
                let fty = Ty::Arr(Box::new(a.clone()), Box::new(ty.clone()));
                let f = self.term(ctx, &fty, fuel);
                let x = self.term(ctx, &a, fuel);
                Term::app(self.ann(f, &fty), x)
            }
            1 => {
                let b = self.ty(1);
                let pty = Ty::Prod(Box::new(ty.clone()), Box::new(b));
                let p = self.term(ctx, &pty, fuel);
                Term::Proj1(tm(self.ann(p, &pty)))
            }
            2 => {
                let a = self.ty(1);
                let pty = Ty::Prod(Box::new(a), Box::new(ty.clone()));
                let p = self.term(ctx, &pty, fuel);
                Term::Proj2(tm(self.ann(p, &pty)))
            }
            3 => Term::BoolInd {
                motive: tm(motive1),
                on_tt: tm(self.term(ctx, ty, fuel)),
                on_ff: tm(self.term(ctx, ty, fuel)),
                scrut: tm(self.term(ctx, &Ty::Bool, fuel)),
            },
            4 => Term::TopInd {
                motive: tm(motive1),
                base: tm(self.term(ctx, ty, fuel)),
                scrut: tm(self.term(ctx, &Ty::Top, fuel)),
            },
            5 => {
                let mut c = ctx.to_vec();
                c.push(Ty::Bool);
                Term::J {
                    motive: tm(weaken(&ty.to_type(), 0, 3)),
                    base: tm(self.term(&c, ty, fuel)),
                    lhs: tm(Term::Tt),
                    rhs: tm(Term::Tt),
                    path: tm(Term::Refl(tm(Term::Tt))),
                }
            }
            6 if ty.small() => {
                let aty = Ty::All(Box::new(ty.clone()));
                let g = self.term(ctx, &aty, fuel);
                let s = self.term(ctx, &Ty::Size, fuel);
                Term::ForApp(tm(self.ann(g, &aty)), tm(s))
            }
            7 if ty.small() => {
                let a = self.small_ty(1);
                let ety = Ty::Ex(Box::new(a.clone()));
                let w = self.term(ctx, &ety, fuel);
                let mut c = ctx.to_vec();
                c.push(Ty::Size);
                c.push(a);
                Term::ExInd {
                    motive: tm(weaken(&ty.code(), 0, 1)),
                    branch: tm(self.term(&c, ty, fuel)),
                    scrut: tm(self.ann(w, &ety)),
                }
            }
            _ => return None,
        })
    }

    /// A closed, well-typed term with its type.
    pub fn closed(&mut self) -> (Term, Ty) {
        let ty = self.ty(2);
        let t = self.term(&[], &ty, 4);
        (t, ty)
    }

    /// A well-scoped but otherwise arbitrary term under `depth` binders,
    /// using every constructor.
    pub fn scoped(&mut self, depth: usize, size: usize) -> Term {
        let consts = ["le0", "sym", "funext", "axExistsPi", "isEquiv"];
        if size == 0 {
            let leaves = [
                Term::U,
                Term::Bot,
                Term::Top,
                Term::Star,
                Term::Bool,
                Term::Tt,
                Term::Ff,
                Term::Size,
                Term::Sz0,
                Term::BotCode,
                Term::TopCode,
                Term::BoolCode,
            ];
            return match self.rng.gen_range(0..4) {
                0 if depth > 0 => Term::Var(self.rng.gen_range(0..depth)),
                1 => Term::constant(consts.choose(&mut self.rng).unwrap()),
                _ => leaves.choose(&mut self.rng).unwrap().clone(),
            };
        }
        let s = size - 1;
        let sub = |g: &mut Self, k: usize| tm(g.scoped(depth + k, s / 2));
        match self.rng.gen_range(0..30) {
            0 => Term::El(sub(self, 0)),
            1 => Term::Pi(sub(self, 0), sub(self, 1)),
            2 => Term::Lam(sub(self, 1)),
            3 => Term::App(sub(self, 0), sub(self, 0)),
            4 => Term::Sigma(sub(self, 0), sub(self, 1)),
            5 => Term::Pair(sub(self, 0), sub(self, 0)),
            6 => Term::Proj1(sub(self, 0)),
            7 => Term::Proj2(sub(self, 0)),
            8 => Term::Id(sub(self, 0), sub(self, 0), sub(self, 0)),
            9 => Term::Refl(sub(self, 0)),
            10 => Term::J {
                motive: sub(self, 3),
                base: sub(self, 1),
                lhs: sub(self, 0),
                rhs: sub(self, 0),
                path: sub(self, 0),
            },
            11 => Term::BotInd {
                motive: sub(self, 1),
                scrut: sub(self, 0),
            },
            12 => Term::TopInd {
                motive: sub(self, 1),
                base: sub(self, 0),
                scrut: sub(self, 0),
            },
            13 => Term::BoolInd {
                motive: sub(self, 1),
                on_tt: sub(self, 0),
                on_ff: sub(self, 0),
                scrut: sub(self, 0),
            },
            14 => Term::SzSuc(sub(self, 0)),
            15 => Term::LeqCode(sub(self, 0), sub(self, 0)),
            16 => Term::Fix(sub(self, 0)),
            17 => Term::FixBeta(sub(self, 0)),
            18 => Term::ExistsCode(sub(self, 1)),
            19 => Term::ExPair(sub(self, 0), sub(self, 0)),
            20 => Term::ExInd {
                motive: sub(self, 1),
                branch: sub(self, 2),
                scrut: sub(self, 0),
            },
            21 => Term::ForallCode(sub(self, 1)),
            22 => Term::ForLam(sub(self, 1)),
            23 => Term::ForApp(sub(self, 0), sub(self, 0)),
            24 => Term::PiCode(sub(self, 0), sub(self, 1)),
            25 => Term::SigCode(sub(self, 0), sub(self, 1)),
            26 => Term::IdCode(sub(self, 0), sub(self, 0), sub(self, 0)),
            27 => Term::Ann(sub(self, 0), sub(self, 0)),
            _ => self.scoped(depth, 0),
        }
    }
}

/// Large types placed where a code is required.
pub fn large_types() -> Vec<Term> {
    vec![
        Term::U,
        Term::Size,
        Term::Bool,
        Term::Top,
        Term::Bot,
        Term::pi(Term::Bool, Term::Bool),
        Term::Sigma(tm(Term::Top), tm(Term::Top)),
        Term::id(Term::Bool, Term::Tt, Term::Tt),
        Term::el(Term::BoolCode),
    ]
}

/// Valid small terms with one hole standing for a code, closed over the
/// hole by `fill`. Each one is a mutation site under an ∃ or ∀ body or
/// an ∃-motive.
pub fn smallness_sites() -> Vec<(&'static str, Box<dyn Fn(Term) -> Term>)> {
    let ex_scrut = || {
        tm(Term::Ann(
            tm(Term::ExPair(tm(Term::Sz0), tm(Term::Tt))),
            tm(Term::el(Term::ExistsCode(tm(Term::BoolCode)))),
        ))
    };
    vec![
        ("∃ body", Box::new(|h: Term| Term::ExistsCode(tm(h)))),
        ("∀ body", Box::new(|h: Term| Term::ForallCode(tm(h)))),
        (
            "Π-code domain under ∃",
            Box::new(|h: Term| Term::ExistsCode(tm(Term::PiCode(tm(h), tm(Term::BoolCode))))),
        ),
        (
            "Σ-code codomain under ∀",
            Box::new(|h: Term| Term::ForallCode(tm(Term::SigCode(tm(Term::TopCode), tm(h))))),
        ),
        (
            "Id-code type under ∀",
            Box::new(|h: Term| {
                Term::ForallCode(tm(Term::IdCode(tm(h), tm(Term::Tt), tm(Term::Tt))))
            }),
        ),
        (
            "∃-motive",
            Box::new(move |h: Term| Term::ExInd {
                motive: tm(weaken(&h, 0, 1)),
                branch: tm(Term::Var(0)),
                scrut: ex_scrut(),
            }),
        ),
    ]
}

/// The valid originals of [`smallness_sites`].
pub fn smallness_originals() -> Vec<Term> {
    smallness_sites().into_iter().map(|(_, f)| f(Term::BoolCode)).collect()
}

/// Every (site, large type) mutation.
pub fn smallness_mutants() -> Vec<(String, Term)> {
    let mut out = Vec::new();
    for (site, fill) in smallness_sites() {
        for l in large_types() {
            out.push((format!("{site} := {l:?}"), fill(l)));
        }
    }
    out
}
