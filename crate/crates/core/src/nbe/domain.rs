//! The semantic domain: weak-head values, closures, and neutral terms.

use std::sync::Arc;

use crate::syntax::{Name, Tm};

pub type Val = Arc<Value>;

/// De Bruijn level of a bound variable in the semantic domain.
pub type Level = usize;

/// Evaluation environment: one value per binder in scope, innermost first.
#[derive(Clone, Default)]
pub struct Env(Option<Arc<EnvNode>>);

struct EnvNode {
    head: Val,
    tail: Env,
    len: usize,
}

impl Env {
    pub fn new() -> Self {
        Env(None)
    }

    pub fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |n| n.len)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn push(&self, v: Val) -> Env {
        Env(Some(Arc::new(EnvNode {
            head: v,
            tail: self.clone(),
            len: self.len() + 1,
        })))
    }

    /// Look up de Bruijn index `idx`.
    pub fn get(&self, idx: usize) -> Option<&Val> {
        let mut cur = self;
        let mut i = idx;
        loop {
            let node = cur.0.as_ref()?;
            if i == 0 {
                return Some(&node.head);
            }
            i -= 1;
            cur = &node.tail;
        }
    }

    /// The identity environment of `len` fresh variables (levels `0..len`).
    pub fn identity(len: usize) -> Env {
        (0..len).fold(Env::new(), |env, l| env.push(Value::var(l)))
    }
}

#[derive(Clone)]
pub struct Closure {
    pub env: Env,
    pub body: Tm,
}

impl Closure {
    pub fn new(env: Env, body: Tm) -> Self {
        Closure { env, body }
    }

    pub fn apply(&self, v: Val) -> Val {
        super::eval::eval(&self.env.push(v), &self.body)
    }

    pub fn apply2(&self, a: Val, b: Val) -> Val {
        super::eval::eval(&self.env.push(a).push(b), &self.body)
    }

    pub fn apply3(&self, a: Val, b: Val, c: Val) -> Val {
        super::eval::eval(&self.env.push(a).push(b).push(c), &self.body)
    }
}

pub enum Value {
    U,
    Pi(Val, Closure),
    Lam(Closure),
    Sigma(Val, Closure),
    Pair(Val, Val),
    Id(Val, Val, Val),
    Refl(Val),
    Bot,
    Top,
    Star,
    Bool,
    Tt,
    Ff,
    Size,
    Sz0,
    SzSuc(Val),

    BotCode,
    TopCode,
    BoolCode,
    PiCode(Val, Closure),
    SigCode(Val, Closure),
    IdCode(Val, Val, Val),
    LeqCode(Val, Val),
    ExistsCode(Closure),
    ForallCode(Closure),

    ExPair(Val, Val),
    ForLam(Closure),

    Neutral(Head, Vec<Frame>),
}

#[derive(Clone)]
pub enum Head {
    Var(Level),
    /// A global. Definitions unfold on demand; primitives and axioms never do.
    Const(Name),
    Fix(Val),
    FixBeta(Val),
}

/// One elimination step applied to a neutral head.
#[derive(Clone)]
pub enum Frame {
    App(Val),
    ForApp(Val),
    Proj1,
    Proj2,
    J {
        motive: Closure,
        base: Closure,
        lhs: Val,
        rhs: Val,
    },
    BotInd {
        motive: Closure,
    },
    TopInd {
        motive: Closure,
        base: Val,
    },
    BoolInd {
        motive: Closure,
        on_tt: Val,
        on_ff: Val,
    },
    ExInd {
        motive: Closure,
        branch: Closure,
    },
    El,
}

impl Value {
    pub fn var(level: Level) -> Val {
        Arc::new(Value::Neutral(Head::Var(level), Vec::new()))
    }

    pub fn constant(name: Name) -> Val {
        Arc::new(Value::Neutral(Head::Const(name), Vec::new()))
    }

    pub fn is_neutral(&self) -> bool {
        matches!(self, Value::Neutral(..))
    }

    /// Short description of the outermost former, for diagnostics.
    pub fn former(&self) -> &'static str {
        match self {
            Value::U => "U",
            Value::Pi(..) => "Π-type",
            Value::Lam(_) => "λ-abstraction",
            Value::Sigma(..) => "Σ-type",
            Value::Pair(..) => "pair",
            Value::Id(..) => "identity type",
            Value::Refl(_) => "refl",
            Value::Bot => "⊥",
            Value::Top => "⊤",
            Value::Star => "⋆",
            Value::Bool => "Bool",
            Value::Tt | Value::Ff => "boolean",
            Value::Size => "Size",
            Value::Sz0 | Value::SzSuc(_) => "size",
            Value::BotCode
            | Value::TopCode
            | Value::BoolCode
            | Value::PiCode(..)
            | Value::SigCode(..)
            | Value::IdCode(..) => "code",
            Value::LeqCode(..) => "≤-code",
            Value::ExistsCode(_) => "∃-code",
            Value::ForallCode(_) => "∀-code",
            Value::ExPair(..) => "∃-pair",
            Value::ForLam(_) => "∀-abstraction",
            Value::Neutral(..) => "neutral",
        }
    }
}
