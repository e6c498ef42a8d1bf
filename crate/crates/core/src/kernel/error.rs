use thiserror::Error;

use crate::syntax::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("unbound variable #{0}")]
    UnboundVariable(usize),
    #[error("unknown global `{0}`")]
    UnknownName(Name),
    #[error("not a function: {0}")]
    NotAFunction(String),
    #[error("expected a code in U: {0}")]
    ExpectedUniverse(String),
    #[error("smallness violation: {0}")]
    SmallnessViolation(String),
    #[error("cannot infer a type for {0}; add an annotation")]
    CannotInfer(String),
    #[error("fix target must be a size-indexed Π type, found {0}")]
    FixShapeMismatch(String),
    #[error("`{0}` is already defined")]
    DuplicateName(Name),
    #[error("axiom `{0}` declared outside the prelude (pass --allow-axioms to permit)")]
    AxiomOutsidePrelude(Name),
    #[error("term is not well scoped: {0}")]
    IllScoped(String),
}

impl TypeError {
    /// Stable identifier of the error kind, used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            TypeError::TypeMismatch { .. } => "TypeMismatch",
            TypeError::UnboundVariable(_) => "UnboundVariable",
            TypeError::UnknownName(_) => "UnknownName",
            TypeError::NotAFunction(_) => "NotAFunction",
            TypeError::ExpectedUniverse(_) => "ExpectedUniverse",
            TypeError::SmallnessViolation(_) => "SmallnessViolation",
            TypeError::CannotInfer(_) => "CannotInfer",
            TypeError::FixShapeMismatch(_) => "FixShapeMismatch",
            TypeError::DuplicateName(_) => "DuplicateName",
            TypeError::AxiomOutsidePrelude(_) => "AxiomOutsidePrelude",
            TypeError::IllScoped(_) => "IllScoped",
        }
    }
}
