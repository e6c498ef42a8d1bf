//! Definitional equality.
//!
//! η for Π, Σ and ∀ is applied whenever one side is an introduction form and
//! the other is neutral, so nested comparisons need no type information.
//! There is no η for ⊤, Bool or ∃. Defined globals are unfolded lazily: two
//! neutrals with the same global head are first compared by spine.

use super::domain::{Closure, Frame, Head, Level, Val, Value};
use super::eval::{app, for_app, force, proj1, proj2, unfold_head, Definitions};

/// Type-directed conversion of `a` and `b` at type `ty`.
pub fn convert(defs: &dyn Definitions, depth: Level, a: &Val, b: &Val, ty: &Val) -> bool {
    let x = Value::var(depth);
    match &*force(defs, ty) {
        Value::Pi(_, cod) => convert(
            defs,
            depth + 1,
            &app(a.clone(), x.clone()),
            &app(b.clone(), x.clone()),
            &cod.apply(x),
        ),
        Value::ForallCode(body) => convert(
            defs,
            depth + 1,
            &for_app(a.clone(), x.clone()),
            &for_app(b.clone(), x.clone()),
            &super::eval::el(body.apply(x)),
        ),
        Value::Sigma(_, cod) => {
            let (a1, b1) = (proj1(a.clone()), proj1(b.clone()));
            if !conv(defs, depth, &a1, &b1) {
                return false;
            }
            convert(
                defs,
                depth,
                &proj2(a.clone()),
                &proj2(b.clone()),
                &cod.apply(a1),
            )
        }
        _ => conv(defs, depth, a, b),
    }
}

/// Untyped (shape-directed) conversion; also used for comparing types.
pub fn conv(defs: &dyn Definitions, depth: Level, a: &Val, b: &Val) -> bool {
    Conv { defs }.values(depth, a, b)
}

struct Conv<'a> {
    defs: &'a dyn Definitions,
}

impl Conv<'_> {
    fn closures(&self, l: Level, c1: &Closure, c2: &Closure) -> bool {
        let x = Value::var(l);
        self.values(l + 1, &c1.apply(x.clone()), &c2.apply(x))
    }

    fn closures2(&self, l: Level, c1: &Closure, c2: &Closure) -> bool {
        let (x, y) = (Value::var(l), Value::var(l + 1));
        self.values(
            l + 2,
            &c1.apply2(x.clone(), y.clone()),
            &c2.apply2(x, y),
        )
    }

    fn closures3(&self, l: Level, c1: &Closure, c2: &Closure) -> bool {
        let (x, y, z) = (Value::var(l), Value::var(l + 1), Value::var(l + 2));
        self.values(
            l + 3,
            &c1.apply3(x.clone(), y.clone(), z.clone()),
            &c2.apply3(x, y, z),
        )
    }

    fn values(&self, l: Level, a: &Val, b: &Val) -> bool {
        use Value as V;
        if std::sync::Arc::ptr_eq(a, b) {
            return true;
        }
        match (&**a, &**b) {
            (V::Lam(c1), V::Lam(c2)) => self.closures(l, c1, c2),
            (V::Lam(c), V::Neutral(..)) => {
                let x = Value::var(l);
                self.values(l + 1, &c.apply(x.clone()), &app(b.clone(), x))
            }
            (V::Neutral(..), V::Lam(_)) => self.values(l, b, a),
            (V::ForLam(c1), V::ForLam(c2)) => self.closures(l, c1, c2),
            (V::ForLam(c), V::Neutral(..)) => {
                let x = Value::var(l);
                self.values(l + 1, &c.apply(x.clone()), &for_app(b.clone(), x))
            }
            (V::Neutral(..), V::ForLam(_)) => self.values(l, b, a),
            (V::Pair(a1, a2), V::Pair(b1, b2)) => {
                self.values(l, a1, b1) && self.values(l, a2, b2)
            }
            (V::Pair(a1, a2), V::Neutral(..)) => {
                self.values(l, a1, &proj1(b.clone())) && self.values(l, a2, &proj2(b.clone()))
            }
            (V::Neutral(..), V::Pair(..)) => self.values(l, b, a),

            (V::Neutral(h1, s1), V::Neutral(h2, s2)) => {
                if self.heads(l, h1, h2) && self.spines(l, s1, s2) {
                    return true;
                }
                match (unfold_head(self.defs, a), unfold_head(self.defs, b)) {
                    (Some(a2), Some(b2)) => self.values(l, &a2, &b2),
                    (Some(a2), None) => self.values(l, &a2, b),
                    (None, Some(b2)) => self.values(l, a, &b2),
                    (None, None) => false,
                }
            }
            (V::Neutral(..), _) => match unfold_head(self.defs, a) {
                Some(a2) => self.values(l, &a2, b),
                None => false,
            },
            (_, V::Neutral(..)) => match unfold_head(self.defs, b) {
                Some(b2) => self.values(l, a, &b2),
                None => false,
            },

            (V::U, V::U)
            | (V::Bot, V::Bot)
            | (V::Top, V::Top)
            | (V::Star, V::Star)
            | (V::Bool, V::Bool)
            | (V::Tt, V::Tt)
            | (V::Ff, V::Ff)
            | (V::Size, V::Size)
            | (V::Sz0, V::Sz0)
            | (V::BotCode, V::BotCode)
            | (V::TopCode, V::TopCode)
            | (V::BoolCode, V::BoolCode) => true,
            (V::Pi(a1, b1), V::Pi(a2, b2))
            | (V::Sigma(a1, b1), V::Sigma(a2, b2))
            | (V::PiCode(a1, b1), V::PiCode(a2, b2))
            | (V::SigCode(a1, b1), V::SigCode(a2, b2)) => {
                self.values(l, a1, a2) && self.closures(l, b1, b2)
            }
            (V::Id(a1, x1, y1), V::Id(a2, x2, y2))
            | (V::IdCode(a1, x1, y1), V::IdCode(a2, x2, y2)) => {
                self.values(l, a1, a2) && self.values(l, x1, x2) && self.values(l, y1, y2)
            }
            (V::Refl(x), V::Refl(y)) | (V::SzSuc(x), V::SzSuc(y)) => self.values(l, x, y),
            (V::LeqCode(i1, j1), V::LeqCode(i2, j2)) | (V::ExPair(i1, j1), V::ExPair(i2, j2)) => {
                self.values(l, i1, i2) && self.values(l, j1, j2)
            }
            (V::ExistsCode(c1), V::ExistsCode(c2)) | (V::ForallCode(c1), V::ForallCode(c2)) => {
                self.closures(l, c1, c2)
            }
            _ => false,
        }
    }

    fn heads(&self, l: Level, h1: &Head, h2: &Head) -> bool {
        match (h1, h2) {
            (Head::Var(a), Head::Var(b)) => a == b,
            (Head::Const(a), Head::Const(b)) => a == b,
            (Head::Fix(f), Head::Fix(g)) | (Head::FixBeta(f), Head::FixBeta(g)) => {
                self.values(l, f, g)
            }
            _ => false,
        }
    }

    fn spines(&self, l: Level, s1: &[Frame], s2: &[Frame]) -> bool {
        s1.len() == s2.len() && s1.iter().zip(s2).all(|(f1, f2)| self.frames(l, f1, f2))
    }

    fn frames(&self, l: Level, f1: &Frame, f2: &Frame) -> bool {
        match (f1, f2) {
            (Frame::App(a), Frame::App(b)) | (Frame::ForApp(a), Frame::ForApp(b)) => {
                self.values(l, a, b)
            }
            (Frame::Proj1, Frame::Proj1) | (Frame::Proj2, Frame::Proj2) | (Frame::El, Frame::El) => {
                true
            }
            (
                Frame::J {
                    motive: m1,
                    base: b1,
                    lhs: x1,
                    rhs: y1,
                },
                Frame::J {
                    motive: m2,
                    base: b2,
                    lhs: x2,
                    rhs: y2,
                },
            ) => {
                self.values(l, x1, x2)
                    && self.values(l, y1, y2)
                    && self.closures3(l, m1, m2)
                    && self.closures(l, b1, b2)
            }
            (Frame::BotInd { motive: m1 }, Frame::BotInd { motive: m2 }) => {
                self.closures(l, m1, m2)
            }
            (
                Frame::TopInd {
                    motive: m1,
                    base: b1,
                },
                Frame::TopInd {
                    motive: m2,
                    base: b2,
                },
            ) => self.closures(l, m1, m2) && self.values(l, b1, b2),
            (
                Frame::BoolInd {
                    motive: m1,
                    on_tt: t1,
                    on_ff: e1,
                },
                Frame::BoolInd {
                    motive: m2,
                    on_tt: t2,
                    on_ff: e2,
                },
            ) => self.closures(l, m1, m2) && self.values(l, t1, t2) && self.values(l, e1, e2),
            (
                Frame::ExInd {
                    motive: m1,
                    branch: b1,
                },
                Frame::ExInd {
                    motive: m2,
                    branch: b2,
                },
            ) => self.closures(l, m1, m2) && self.closures2(l, b1, b2),
            _ => false,
        }
    }
}
