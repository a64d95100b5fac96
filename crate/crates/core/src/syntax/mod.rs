//! ASCII concrete syntax for formulas and sequents.
//!
//! ```text
//! forall x. F | exists x. F | ~F | F & F | F | F | F -> F | top | bot | p(t1,...,tn) | p | ( F )
//! ```
//!
//! Precedence is `~` over `&` over `|` over `->`; `->` associates to the
//! right, `&` and `|` to the left, and a quantifier body extends as far right
//! as possible. The Unicode connectives are accepted on input.

mod lexer;
mod parser;
mod printer;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, InputFormula};
use crate::normalize::{normalize_sequent, normalize_to_nnf, WellFormednessError};
use crate::term::Term;
use parser::Parser;

/// Byte range into the parsed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(span: SourceSpan, message: impl Into<String>) -> Self {
        ParseError {
            span,
            message: message.into(),
        }
    }
}

/// Either stage of reading a problem can fail.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReadError {
    #[error("syntax error: {0}")]
    Parse(#[from] ParseError),
    #[error("ill-formed input: {0}")]
    WellFormedness(#[from] WellFormednessError),
}

pub fn parse_formula(text: &str) -> Result<InputFormula, ParseError> {
    parse_formula_with(text, false)
}

fn parse_formula_with(text: &str, allow_generated: bool) -> Result<InputFormula, ParseError> {
    let mut p = Parser::new(text, allow_generated)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses comma-separated sequent members. The empty sequent is rejected.
pub fn parse_sequent(text: &str) -> Result<Vec<InputFormula>, ParseError> {
    parse_sequent_with(text, false)
}

/// Like [`parse_sequent`], but also accepts generated constants such as
/// `_a1`. Used when reading back derivations written by the prover.
pub fn parse_derived_sequent(text: &str) -> Result<Vec<InputFormula>, ParseError> {
    parse_sequent_with(text, true)
}

fn parse_sequent_with(text: &str, allow_generated: bool) -> Result<Vec<InputFormula>, ParseError> {
    let mut p = Parser::new(text, allow_generated)?;
    if p.at_eof() {
        return Err(ParseError::new(
            SourceSpan::new(0, text.len()),
            "expected formula, found empty sequent",
        ));
    }
    let mut members = Vec::new();
    loop {
        members.push(p.formula()?);
        if !p.eat_comma() {
            break;
        }
    }
    p.finish()?;
    Ok(members)
}

/// Parses a closed term such as a printed witness. Generated constants are
/// accepted.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, true)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses and normalizes a user formula.
pub fn read_formula(text: &str) -> Result<Formula, ReadError> {
    Ok(normalize_to_nnf(&parse_formula(text)?)?)
}

/// Parses and normalizes a user sequent.
pub fn read_sequent(text: &str) -> Result<Vec<Formula>, ReadError> {
    Ok(normalize_sequent(&parse_sequent(text)?)?)
}

/// Parses and normalizes one printed member that may mention generated
/// constants.
pub fn read_derived_formula(text: &str) -> Result<Formula, ReadError> {
    Ok(normalize_to_nnf(&parse_formula_with(text, true)?)?)
}

/// Parses and normalizes a printed sequent that may mention generated
/// constants.
pub fn read_derived_sequent(text: &str) -> Result<Vec<Formula>, ReadError> {
    Ok(normalize_sequent(&parse_derived_sequent(text)?)?)
}

pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

pub fn print_input_formula(f: &InputFormula) -> String {
    f.to_string()
}

/// Members joined by `, `.
pub struct DisplaySequent<'a>(pub &'a [Formula]);

impl fmt::Display for DisplaySequent<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt::Display::fmt(m, f)?;
        }
        Ok(())
    }
}

pub fn print_sequent(members: &[Formula]) -> String {
    DisplaySequent(members).to_string()
}
