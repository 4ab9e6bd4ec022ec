//! The `.arg` text format.
//!
//! ```text
//! # Bet 2 of the Ellsberg urn
//! label: A2
//! atoms: R, B, Y
//! constraint: exactly_one(R, B, Y)
//! premise: P(R) = 0.33
//! premise: P(B or Y) = 0.67
//! conclusion: P(B)
//! ```
//!
//! One directive per line. Lines whose first non-blank character is `#` are
//! comments. Formulas use `not`, `and`, `or`, `->` (or `¬ ∧ ∨ →`), `true`,
//! `false`, parentheses, and the sugar `exactly_one(..)` / `at_most_one(..)`
//! which expands on parse. Premises are `P(E) = v`, `P(E | H) = v` or
//! `P(E | H) in [a, b]`; numbers are decimals or fractions `a/b`.

mod lexer;
mod parser;
mod render;

use std::fmt;

use crate::model::Violation;

pub use parser::{parse_argument, parse_argument_with_budget, parse_formula};
pub use render::{render_argument, render_formula};

/// Position of a token or line fragment, 1-based line and column (in chars).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        Self { line, column, length }
    }

    /// Smallest span on `self.line` covering both spans.
    pub(crate) fn to(self, end: SourceSpan) -> SourceSpan {
        if end.line != self.line {
            return self;
        }
        let stop = (end.column + end.length).max(self.column + self.length);
        SourceSpan::new(self.line, self.column, stop - self.column)
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownDirective,
    UnknownAtom,
    BoundOutOfRange,
    DuplicateConclusion,
    DuplicateDirective,
    MissingDirective,
    Invalid(Violation),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(kind: ParseErrorKind, span: SourceSpan, message: impl Into<String>) -> Self {
        Self { kind, span, message: message.into() }
    }
}
