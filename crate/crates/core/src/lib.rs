//! A checker for Martin-Löf type theory with a type of sizes, impredicative
//! parametric quantifiers over sizes, and a well-founded fixpoint operator.

pub mod cli;
pub mod corpus;
pub mod frontend;
pub mod kernel;
pub mod model;
pub mod nbe;
pub mod session;
pub mod syntax;
