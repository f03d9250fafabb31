//! A small logic language over CD truth values.
//!
//! ```text
//! expr    := impl
//! impl    := or ("->" impl)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | primary
//! primary := "(" expr ")" | "T" | "F" | "B" | "N"
//!          | "<" num "," num ">" | "{" int "," int "," int "}"
//!          | "random" "(" num ")" | ident
//! ```
//!
//! Expressions can be evaluated crisply, over a t-norm family, or through σ
//! as complex amplitudes.

mod ast;
mod env;
mod eval;
mod parser;

pub use ast::Expr;
pub use env::{EnvError, Environment, Value};
pub use eval::{
    compare, eval_crisp, eval_fuzzy, eval_quantum, sample_random, ComparisonReport, EvalError, NodeError,
    SampleEstimate,
};
pub use parser::{parse, ParseError};
