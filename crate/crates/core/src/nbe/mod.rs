//! Normalization by evaluation: [`eval`] into weak-head values, [`readback`]
//! to normal forms, and [`convert`] for definitional equality.

pub mod conv;
pub mod domain;
pub mod eval;
pub mod quote;

pub use conv::{conv, convert};
pub use domain::{Closure, Env, Frame, Head, Level, Val, Value};
pub use eval::{eval, force, Definitions, NoDefinitions};
pub use quote::{readback, readback_with, Unfold};

/// Normal form of a closed or open term under the identity environment.
pub fn normalize(defs: &dyn Definitions, depth: Level, t: &crate::syntax::Term) -> crate::syntax::Term {
    readback_with(Unfold::Always(defs), depth, &eval(&Env::identity(depth), t))
}
