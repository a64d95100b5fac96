use core::fmt::{self, Write};

use crate::formula::{Formula, InputFormula};
use crate::term::{Atom, Term};

enum View<'a, T> {
    Atom(&'a Atom),
    NegAtom(&'a Atom),
    Not(&'a T),
    And(&'a T, &'a T),
    Or(&'a T, &'a T),
    Implies(&'a T, &'a T),
    Forall(&'a str, &'a T),
    Exists(&'a str, &'a T),
    Top,
    Bot,
}

trait Printable: Sized {
    fn view(&self) -> View<'_, Self>;
}

impl Printable for Formula {
    fn view(&self) -> View<'_, Self> {
        match self {
            Formula::Atom(a) => View::Atom(a),
            Formula::NegAtom(a) => View::NegAtom(a),
            Formula::Top => View::Top,
            Formula::Bot => View::Bot,
            Formula::And(l, r) => View::And(l, r),
            Formula::Or(l, r) => View::Or(l, r),
            Formula::Forall(v, b) => View::Forall(v, b),
            Formula::Exists(v, b) => View::Exists(v, b),
        }
    }
}

impl Printable for InputFormula {
    fn view(&self) -> View<'_, Self> {
        match self {
            InputFormula::Atom(a) => View::Atom(a),
            InputFormula::Not(g) => View::Not(g),
            InputFormula::Top => View::Top,
            InputFormula::Bot => View::Bot,
            InputFormula::And(l, r) => View::And(l, r),
            InputFormula::Or(l, r) => View::Or(l, r),
            InputFormula::Implies(l, r) => View::Implies(l, r),
            InputFormula::Forall(v, b) => View::Forall(v, b),
            InputFormula::Exists(v, b) => View::Exists(v, b),
        }
    }
}

const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

fn binary<T: Printable>(node: &T) -> Option<(u8, &'static str, &T, &T)> {
    match node.view() {
        View::And(l, r) => Some((AND, " & ", l, r)),
        View::Or(l, r) => Some((OR, " | ", l, r)),
        View::Implies(l, r) => Some((IMPLIES, " -> ", l, r)),
        _ => None,
    }
}

/// `context` is the binding strength demanded by the parent; `last` says
/// whether nothing follows this node up to the enclosing parenthesis, which
/// decides if a quantifier may run to the right unbracketed.
fn write_node<T: Printable, W: Write>(
    out: &mut W,
    node: &T,
    context: u8,
    last: bool,
) -> fmt::Result {
    if let Some((prec, op, l, r)) = binary(node) {
        let parens = prec < context;
        let last = last || parens;
        if parens {
            out.write_char('(')?;
        }
        let (lctx, rctx) = if prec == IMPLIES {
            (prec + 1, prec)
        } else {
            (prec, prec + 1)
        };
        write_node(out, l, lctx, false)?;
        out.write_str(op)?;
        write_node(out, r, rctx, last)?;
        if parens {
            out.write_char(')')?;
        }
        return Ok(());
    }
    match node.view() {
        View::Atom(a) => write_atom(out, a),
        View::NegAtom(a) => {
            out.write_char('~')?;
            write_atom(out, a)
        }
        View::Top => out.write_str("top"),
        View::Bot => out.write_str("bot"),
        View::Not(g) => {
            out.write_char('~')?;
            write_node(out, g, UNARY, last)
        }
        View::Forall(v, b) => write_quantifier(out, "forall", v, b, last),
        View::Exists(v, b) => write_quantifier(out, "exists", v, b, last),
        View::And(..) | View::Or(..) | View::Implies(..) => unreachable!(),
    }
}

fn write_quantifier<T: Printable, W: Write>(
    out: &mut W,
    kw: &str,
    var: &str,
    body: &T,
    last: bool,
) -> fmt::Result {
    if !last {
        out.write_char('(')?;
    }
    write!(out, "{kw} {var}. ")?;
    if binary(body).is_some() {
        out.write_char('(')?;
        write_node(out, body, 0, true)?;
        out.write_char(')')?;
    } else {
        write_node(out, body, 0, true)?;
    }
    if !last {
        out.write_char(')')?;
    }
    Ok(())
}

pub(crate) fn write_atom<W: Write>(out: &mut W, atom: &Atom) -> fmt::Result {
    out.write_str(&atom.pred)?;
    write_args(out, &atom.args)
}

fn write_args<W: Write>(out: &mut W, args: &[Term]) -> fmt::Result {
    if args.is_empty() {
        return Ok(());
    }
    out.write_char('(')?;
    for (i, t) in args.iter().enumerate() {
        if i > 0 {
            out.write_char(',')?;
        }
        write_term(out, t)?;
    }
    out.write_char(')')
}

pub(crate) fn write_term<W: Write>(out: &mut W, t: &Term) -> fmt::Result {
    match t {
        Term::Var(n) | Term::Const(n) => out.write_str(n),
        Term::App(f, args) => {
            out.write_str(f)?;
            write_args(out, args)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, self, 0, true)
    }
}

impl fmt::Display for InputFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, self, 0, true)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_atom(f, self)
    }
}
