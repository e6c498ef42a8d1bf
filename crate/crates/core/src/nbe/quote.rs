//! Readback from values to β-normal terms.

use super::domain::{Closure, Frame, Head, Level, Val, Value};
use super::eval::{force, Definitions};
use crate::syntax::{tm, Term};

/// Whether readback unfolds defined globals.
#[derive(Clone, Copy)]
pub enum Unfold<'a> {
    /// Keep globals folded; the result mentions definitions by name.
    Never,
    /// Unfold every definition, producing a fully δ-normal term.
    Always(&'a dyn Definitions),
}

pub fn readback(depth: Level, v: &Val) -> Term {
    readback_with(Unfold::Never, depth, v)
}

pub fn readback_with(mode: Unfold<'_>, depth: Level, v: &Val) -> Term {
    Quoter { mode }.value(depth, v)
}

struct Quoter<'a> {
    mode: Unfold<'a>,
}

impl Quoter<'_> {
    fn closure(&self, l: Level, c: &Closure) -> Term {
        self.value(l + 1, &c.apply(Value::var(l)))
    }

    fn closure2(&self, l: Level, c: &Closure) -> Term {
        self.value(l + 2, &c.apply2(Value::var(l), Value::var(l + 1)))
    }

    fn closure3(&self, l: Level, c: &Closure) -> Term {
        self.value(
            l + 3,
            &c.apply3(Value::var(l), Value::var(l + 1), Value::var(l + 2)),
        )
    }

    fn value(&self, l: Level, v: &Val) -> Term {
        let forced;
        let v = match self.mode {
            Unfold::Always(defs) => {
                forced = force(defs, v);
                &forced
            }
            Unfold::Never => v,
        };
        let q = |x: &Val| tm(self.value(l, x));
        match &**v {
            Value::U => Term::U,
            Value::Pi(a, b) => Term::Pi(q(a), tm(self.closure(l, b))),
            Value::Lam(b) => Term::Lam(tm(self.closure(l, b))),
            Value::Sigma(a, b) => Term::Sigma(q(a), tm(self.closure(l, b))),
            Value::Pair(a, b) => Term::Pair(q(a), q(b)),
            Value::Id(a, x, y) => Term::Id(q(a), q(x), q(y)),
            Value::Refl(x) => Term::Refl(q(x)),
            Value::Bot => Term::Bot,
            Value::Top => Term::Top,
            Value::Star => Term::Star,
            Value::Bool => Term::Bool,
            Value::Tt => Term::Tt,
            Value::Ff => Term::Ff,
            Value::Size => Term::Size,
            Value::Sz0 => Term::Sz0,
            Value::SzSuc(s) => Term::SzSuc(q(s)),
            Value::BotCode => Term::BotCode,
            Value::TopCode => Term::TopCode,
            Value::BoolCode => Term::BoolCode,
            Value::PiCode(a, b) => Term::PiCode(q(a), tm(self.closure(l, b))),
            Value::SigCode(a, b) => Term::SigCode(q(a), tm(self.closure(l, b))),
            Value::IdCode(a, x, y) => Term::IdCode(q(a), q(x), q(y)),
            Value::LeqCode(i, j) => Term::LeqCode(q(i), q(j)),
            Value::ExistsCode(b) => Term::ExistsCode(tm(self.closure(l, b))),
            Value::ForallCode(b) => Term::ForallCode(tm(self.closure(l, b))),
            Value::ExPair(s, a) => Term::ExPair(q(s), q(a)),
            Value::ForLam(b) => Term::ForLam(tm(self.closure(l, b))),
            Value::Neutral(h, spine) => {
                let head = match h {
                    Head::Var(k) => {
                        assert!(*k < l, "readback: level {k} escapes depth {l}");
                        Term::Var(l - k - 1)
                    }
                    Head::Const(n) => Term::Const(n.clone()),
                    Head::Fix(f) => Term::Fix(q(f)),
                    Head::FixBeta(f) => Term::FixBeta(q(f)),
                };
                spine
                    .iter()
                    .fold(head, |acc, fr| self.frame(l, acc, fr))
            }
        }
    }

    fn frame(&self, l: Level, acc: Term, fr: &Frame) -> Term {
        let q = |x: &Val| tm(self.value(l, x));
        let acc = tm(acc);
        match fr {
            Frame::App(a) => Term::App(acc, q(a)),
            Frame::ForApp(s) => Term::ForApp(acc, q(s)),
            Frame::Proj1 => Term::Proj1(acc),
            Frame::Proj2 => Term::Proj2(acc),
            Frame::J {
                motive,
                base,
                lhs,
                rhs,
            } => Term::J {
                motive: tm(self.closure3(l, motive)),
                base: tm(self.closure(l, base)),
                lhs: q(lhs),
                rhs: q(rhs),
                path: acc,
            },
            Frame::BotInd { motive } => Term::BotInd {
                motive: tm(self.closure(l, motive)),
                scrut: acc,
            },
            Frame::TopInd { motive, base } => Term::TopInd {
                motive: tm(self.closure(l, motive)),
                base: q(base),
                scrut: acc,
            },
            Frame::BoolInd {
                motive,
                on_tt,
                on_ff,
            } => Term::BoolInd {
                motive: tm(self.closure(l, motive)),
                on_tt: q(on_tt),
                on_ff: q(on_ff),
                scrut: acc,
            },
            Frame::ExInd { motive, branch } => Term::ExInd {
                motive: tm(self.closure(l, motive)),
                branch: tm(self.closure2(l, branch)),
                scrut: acc,
            },
            Frame::El => Term::El(acc),
        }
    }
}
