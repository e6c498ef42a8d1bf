//! Named surface syntax produced by the parser.

use super::lexer::Pos;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Ident(String, Pos),
    Univ,
    SizeTy,
    BoolTy,
    TopTy,
    BotTy,
    Tt,
    Ff,
    Star,
    Zero,
    Num(usize),
    El(Box<Expr>),
    /// `type T`: a large type in term position.
    TypeEsc(Box<Expr>),
    /// `! t`: a term in type position, taken as is (no `El`).
    Raw(Box<Expr>),
    /// `(x y : A) -> B`, or `A -> B` with no names.
    Pi(Vec<String>, Box<Expr>, Box<Expr>),
    Sigma(Vec<String>, Box<Expr>, Box<Expr>),
    Lam(Vec<String>, Box<Expr>),
    ForLam(Vec<String>, Box<Expr>),
    App(Box<Expr>, Box<Expr>),
    ForApp(Box<Expr>, Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
    Proj(u8, Box<Expr>),
    Id(Box<Expr>, Box<Expr>, Box<Expr>),
    Refl(Box<Expr>),
    J {
        motive: Binder,
        base: Binder,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        path: Box<Expr>,
    },
    BotInd {
        motive: Binder,
        scrut: Box<Expr>,
    },
    TopInd {
        motive: Binder,
        base: Box<Expr>,
        scrut: Box<Expr>,
    },
    BoolInd {
        motive: Binder,
        on_tt: Box<Expr>,
        on_ff: Box<Expr>,
        scrut: Box<Expr>,
    },
    ExInd {
        motive: Binder,
        branch: Binder,
        scrut: Box<Expr>,
    },
    ExPair(Box<Expr>, Box<Expr>),
    Suc(Box<Expr>),
    Fix(Box<Expr>),
    FixBeta(Box<Expr>),
    /// `forall i. A` or the bounded `forall j < i. A`.
    Forall(String, Option<Box<Expr>>, Box<Expr>),
    Exists(String, Option<Box<Expr>>, Box<Expr>),
    Leq(Box<Expr>, Box<Expr>),
    Lt(Box<Expr>, Box<Expr>),
    Ann(Box<Expr>, Box<Expr>),
}

/// Names bound over a sub-expression: `(x y q. P)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Binder {
    pub names: Vec<String>,
    pub body: Box<Expr>,
}

/// A parameter group `(x y : A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Param {
    pub names: Vec<String>,
    pub ty: Expr,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decl {
    Def {
        name: String,
        params: Vec<Param>,
        ty: Expr,
        body: Expr,
        pos: Pos,
    },
    Axiom {
        name: String,
        params: Vec<Param>,
        ty: Expr,
        pos: Pos,
    },
    Import {
        path: String,
        pos: Pos,
    },
}

impl Decl {
    pub fn pos(&self) -> Pos {
        match self {
            Decl::Def { pos, .. } | Decl::Axiom { pos, .. } | Decl::Import { pos, .. } => *pos,
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Def { name, .. } | Decl::Axiom { name, .. } => Some(name),
            Decl::Import { .. } => None,
        }
    }
}
