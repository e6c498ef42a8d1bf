//! Evaluation of core terms into weak-head values.
//!
//! Globals evaluate to neutral constants; definitions are only unfolded by
//! [`force`] and by the conversion checker. `fix` and `fixb` are always
//! neutral: their computation rule is a propositional equality.

use std::sync::Arc;

use super::domain::{Closure, Env, Frame, Head, Val, Value};
use crate::syntax::{Name, Term};

/// Source of definition bodies for δ-unfolding.
pub trait Definitions {
    /// The value of a defined global, or `None` for primitives, axioms and
    /// unknown names.
    fn definition(&self, name: &str) -> Option<Val>;
}

/// A definition table with nothing in it.
pub struct NoDefinitions;

impl Definitions for NoDefinitions {
    fn definition(&self, _: &str) -> Option<Val> {
        None
    }
}

pub fn eval(env: &Env, t: &Term) -> Val {
    use Term as T;
    let clo = |b: &crate::syntax::Tm| Closure::new(env.clone(), b.clone());
    let ev = |t: &Term| eval(env, t);
    match t {
        T::Var(i) => env
            .get(*i)
            .unwrap_or_else(|| panic!("eval: unbound index {i} (env length {})", env.len()))
            .clone(),
        T::Const(n) => Value::constant(n.clone()),
        T::U => Arc::new(Value::U),
        T::El(c) => el(ev(c)),
        T::Pi(a, b) => Arc::new(Value::Pi(ev(a), clo(b))),
        T::Lam(b) => Arc::new(Value::Lam(clo(b))),
        T::App(f, a) => app(ev(f), ev(a)),
        T::Sigma(a, b) => Arc::new(Value::Sigma(ev(a), clo(b))),
        T::Pair(a, b) => Arc::new(Value::Pair(ev(a), ev(b))),
        T::Proj1(p) => proj1(ev(p)),
        T::Proj2(p) => proj2(ev(p)),
        T::Id(a, x, y) => Arc::new(Value::Id(ev(a), ev(x), ev(y))),
        T::Refl(x) => Arc::new(Value::Refl(ev(x))),
        T::J {
            motive,
            base,
            lhs,
            rhs,
            path,
        } => j_elim(clo(motive), clo(base), ev(lhs), ev(rhs), ev(path)),
        T::Bot => Arc::new(Value::Bot),
        T::BotInd { motive, scrut } => bot_ind(clo(motive), ev(scrut)),
        T::Top => Arc::new(Value::Top),
        T::Star => Arc::new(Value::Star),
        T::TopInd {
            motive,
            base,
            scrut,
        } => top_ind(clo(motive), ev(base), ev(scrut)),
        T::Bool => Arc::new(Value::Bool),
        T::Tt => Arc::new(Value::Tt),
        T::Ff => Arc::new(Value::Ff),
        T::BoolInd {
            motive,
            on_tt,
            on_ff,
            scrut,
        } => bool_ind(clo(motive), ev(on_tt), ev(on_ff), ev(scrut)),
        T::Size => Arc::new(Value::Size),
        T::Sz0 => Arc::new(Value::Sz0),
        T::SzSuc(s) => Arc::new(Value::SzSuc(ev(s))),
        T::LeqCode(i, j) => Arc::new(Value::LeqCode(ev(i), ev(j))),
        T::Fix(f) => Arc::new(Value::Neutral(Head::Fix(ev(f)), Vec::new())),
        T::FixBeta(f) => Arc::new(Value::Neutral(Head::FixBeta(ev(f)), Vec::new())),
        T::ExistsCode(b) => Arc::new(Value::ExistsCode(clo(b))),
        T::ExPair(s, a) => Arc::new(Value::ExPair(ev(s), ev(a))),
        T::ExInd {
            motive,
            branch,
            scrut,
        } => ex_ind(clo(motive), clo(branch), ev(scrut)),
        T::ForallCode(b) => Arc::new(Value::ForallCode(clo(b))),
        T::ForLam(b) => Arc::new(Value::ForLam(clo(b))),
        T::ForApp(f, s) => for_app(ev(f), ev(s)),
        T::BotCode => Arc::new(Value::BotCode),
        T::TopCode => Arc::new(Value::TopCode),
        T::BoolCode => Arc::new(Value::BoolCode),
        T::PiCode(a, b) => Arc::new(Value::PiCode(ev(a), clo(b))),
        T::SigCode(a, b) => Arc::new(Value::SigCode(ev(a), clo(b))),
        T::IdCode(a, x, y) => Arc::new(Value::IdCode(ev(a), ev(x), ev(y))),
        T::Ann(t, _) => ev(t),
    }
}

fn push_frame(v: &Val, frame: Frame) -> Val {
    match &**v {
        Value::Neutral(h, sp) => {
            let mut sp = sp.clone();
            sp.push(frame);
            Arc::new(Value::Neutral(h.clone(), sp))
        }
        other => panic!("eliminator applied to {} (ill-typed evaluation)", other.former()),
    }
}

pub fn app(f: Val, a: Val) -> Val {
    match &*f {
        Value::Lam(c) => c.apply(a),
        _ => push_frame(&f, Frame::App(a)),
    }
}

pub fn for_app(f: Val, s: Val) -> Val {
    match &*f {
        Value::ForLam(c) => c.apply(s),
        _ => push_frame(&f, Frame::ForApp(s)),
    }
}

pub fn proj1(p: Val) -> Val {
    match &*p {
        Value::Pair(a, _) => a.clone(),
        _ => push_frame(&p, Frame::Proj1),
    }
}

pub fn proj2(p: Val) -> Val {
    match &*p {
        Value::Pair(_, b) => b.clone(),
        _ => push_frame(&p, Frame::Proj2),
    }
}

pub fn j_elim(motive: Closure, base: Closure, lhs: Val, rhs: Val, path: Val) -> Val {
    match &*path {
        Value::Refl(_) => base.apply(lhs),
        _ => push_frame(
            &path,
            Frame::J {
                motive,
                base,
                lhs,
                rhs,
            },
        ),
    }
}

pub fn bot_ind(motive: Closure, scrut: Val) -> Val {
    push_frame(&scrut, Frame::BotInd { motive })
}

pub fn top_ind(motive: Closure, base: Val, scrut: Val) -> Val {
    match &*scrut {
        Value::Star => base,
        _ => push_frame(&scrut, Frame::TopInd { motive, base }),
    }
}

pub fn bool_ind(motive: Closure, on_tt: Val, on_ff: Val, scrut: Val) -> Val {
    match &*scrut {
        Value::Tt => on_tt,
        Value::Ff => on_ff,
        _ => push_frame(
            &scrut,
            Frame::BoolInd {
                motive,
                on_tt,
                on_ff,
            },
        ),
    }
}

pub fn ex_ind(motive: Closure, branch: Closure, scrut: Val) -> Val {
    match &*scrut {
        Value::ExPair(s, a) => branch.apply2(s.clone(), a.clone()),
        _ => push_frame(&scrut, Frame::ExInd { motive, branch }),
    }
}

/// Decode a code into the type it names. `≤`, `∃` and `∀` codes have no
/// separate large former, so they stand for their own decoding.
pub fn el(code: Val) -> Val {
    match &*code {
        Value::BotCode => Arc::new(Value::Bot),
        Value::TopCode => Arc::new(Value::Top),
        Value::BoolCode => Arc::new(Value::Bool),
        Value::PiCode(a, b) => Arc::new(Value::Pi(el(a.clone()), el_closure(b))),
        Value::SigCode(a, b) => Arc::new(Value::Sigma(el(a.clone()), el_closure(b))),
        Value::IdCode(a, x, y) => Arc::new(Value::Id(el(a.clone()), x.clone(), y.clone())),
        Value::LeqCode(..) | Value::ExistsCode(_) | Value::ForallCode(_) => code,
        _ => push_frame(&code, Frame::El),
    }
}

fn el_closure(c: &Closure) -> Closure {
    Closure::new(c.env.clone(), Arc::new(Term::El(c.body.clone())))
}

pub fn apply_frame(v: Val, frame: &Frame) -> Val {
    match frame {
        Frame::App(a) => app(v, a.clone()),
        Frame::ForApp(s) => for_app(v, s.clone()),
        Frame::Proj1 => proj1(v),
        Frame::Proj2 => proj2(v),
        Frame::J {
            motive,
            base,
            lhs,
            rhs,
        } => j_elim(motive.clone(), base.clone(), lhs.clone(), rhs.clone(), v),
        Frame::BotInd { motive } => bot_ind(motive.clone(), v),
        Frame::TopInd { motive, base } => top_ind(motive.clone(), base.clone(), v),
        Frame::BoolInd {
            motive,
            on_tt,
            on_ff,
        } => bool_ind(motive.clone(), on_tt.clone(), on_ff.clone(), v),
        Frame::ExInd { motive, branch } => ex_ind(motive.clone(), branch.clone(), v),
        Frame::El => el(v),
    }
}

/// Unfold one defined global at the head of `v`, if there is one.
pub fn unfold_head(defs: &dyn Definitions, v: &Val) -> Option<Val> {
    match &**v {
        Value::Neutral(Head::Const(name), spine) => {
            let body = defs.definition(name)?;
            Some(spine.iter().fold(body, apply_frame))
        }
        _ => None,
    }
}

/// Unfold defined globals at the head until the value is a constructor or
/// a neutral blocked on a variable, primitive, axiom or `fix`.
pub fn force(defs: &dyn Definitions, v: &Val) -> Val {
    let mut cur = v.clone();
    while let Some(next) = unfold_head(defs, &cur) {
        cur = next;
    }
    cur
}

/// Name of the global at the head of a neutral value, if any.
pub fn head_const(v: &Value) -> Option<&Name> {
    match v {
        Value::Neutral(Head::Const(n), _) => Some(n),
        _ => None,
    }
}
