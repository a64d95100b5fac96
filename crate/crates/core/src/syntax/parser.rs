use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, SourceSpan};
use crate::formula::InputFormula;
use crate::term::{Atom, Term};

/// Recursive-descent parser. Identifiers bound by an enclosing quantifier
/// become variables, all other term identifiers constants.
pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    bound: Vec<String>,
    allow_generated: bool,
}

impl Parser {
    pub(crate) fn new(text: &str, allow_generated: bool) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            bound: Vec::new(),
            allow_generated,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn span(&self) -> SourceSpan {
        self.tokens[self.pos].span
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(tok.describe()))
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::new(
            self.span(),
            format!("expected {expected}, found {}", self.peek().describe()),
        )
    }

    fn ident(&mut self) -> Result<(String, SourceSpan), ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let span = self.bump().span;
                if name.starts_with('_') && !self.allow_generated {
                    return Err(ParseError::new(
                        span,
                        format!("identifier `{name}` uses the prefix `_` reserved for generated constants"),
                    ));
                }
                Ok((name, span))
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::Eof).map(|_| ())
    }

    pub(crate) fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub(crate) fn eat_comma(&mut self) -> bool {
        if *self.peek() == Tok::Comma {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn formula(&mut self) -> Result<InputFormula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.formula()?;
            return Ok(InputFormula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<InputFormula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = InputFormula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<InputFormula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = InputFormula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<InputFormula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(InputFormula::Not(Box::new(self.unary()?)))
            }
            Tok::Forall | Tok::Exists => {
                let universal = *self.peek() == Tok::Forall;
                self.bump();
                let (var, _) = self.ident()?;
                self.expect(Tok::Dot)?;
                self.bound.push(var.clone());
                let body = self.formula();
                self.bound.pop();
                let body = Box::new(body?);
                Ok(if universal {
                    InputFormula::Forall(var, body)
                } else {
                    InputFormula::Exists(var, body)
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<InputFormula, ParseError> {
        match self.peek() {
            Tok::Top => {
                self.bump();
                Ok(InputFormula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(InputFormula::Bot)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(_) => {
                let (pred, _) = self.ident()?;
                let args = if *self.peek() == Tok::LParen {
                    self.arguments()?
                } else {
                    Vec::new()
                };
                Ok(InputFormula::Atom(Atom { pred, args }))
            }
            _ => Err(self.unexpected("formula")),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = vec_with(self.term()?);
        while self.eat_comma() {
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    pub(crate) fn term(&mut self) -> Result<Term, ParseError> {
        let (name, _) = self.ident()?;
        if *self.peek() == Tok::LParen {
            return Ok(Term::App(name, self.arguments()?));
        }
        if self.bound.contains(&name) {
            Ok(Term::Var(name))
        } else {
            Ok(Term::Const(name))
        }
    }
}

fn vec_with(t: Term) -> Vec<Term> {
    let mut v = Vec::with_capacity(2);
    v.push(t);
    v
}
