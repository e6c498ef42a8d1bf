//! Surface syntax: lexing, parsing, elaboration and printing.

pub mod elab;
pub mod lexer;
pub mod parser;
pub mod print;
pub mod surface;

use thiserror::Error;

pub use elab::{Elab, ElabError, Mode, Resolve};
pub use lexer::Pos;
pub use parser::{parse_expr, parse_file};
pub use print::{print_term, print_term_in, print_type, print_type_in};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: syntax error: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}
