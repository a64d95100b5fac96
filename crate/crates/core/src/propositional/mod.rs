//! Propositional approximations of quantified sequents and the stability
//! classification built on them.
//!
//! A surface quantified subformula is replaced by a truth constant: the
//! standard approximation sends `exists` to `bot` and `forall` to `top`, the
//! max approximation sends both to `top`, the min approximation both to
//! `bot`. Ground atoms become propositional letters keyed by their printed
//! form, so equal atoms in different members share one letter.

mod sat;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::fmt;

use crate::formula::Formula;
use crate::sequent::Sequent;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PropFormula {
    Atom(String),
    NegAtom(String),
    Top,
    Bot,
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn atom(key: &str) -> Self {
        PropFormula::Atom(key.into())
    }

    pub fn neg_atom(key: &str) -> Self {
        PropFormula::NegAtom(key.into())
    }

    pub fn and(l: PropFormula, r: PropFormula) -> Self {
        PropFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: PropFormula, r: PropFormula) -> Self {
        PropFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn for_each_key<'a>(&'a self, visit: &mut impl FnMut(&'a str)) {
        match self {
            PropFormula::Atom(k) | PropFormula::NegAtom(k) => visit(k),
            PropFormula::Top | PropFormula::Bot => {}
            PropFormula::And(l, r) | PropFormula::Or(l, r) => {
                l.for_each_key(visit);
                r.for_each_key(visit);
            }
        }
    }

    /// Removes `top`/`bot` below connectives; the result is either a constant
    /// or constant-free.
    pub fn fold_constants(&self) -> PropFormula {
        match self {
            PropFormula::And(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (PropFormula::Bot, _) | (_, PropFormula::Bot) => PropFormula::Bot,
                (PropFormula::Top, x) | (x, PropFormula::Top) => x,
                (a, b) => PropFormula::and(a, b),
            },
            PropFormula::Or(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (PropFormula::Top, _) | (_, PropFormula::Top) => PropFormula::Top,
                (PropFormula::Bot, x) | (x, PropFormula::Bot) => x,
                (a, b) => PropFormula::or(a, b),
            },
            _ => self.clone(),
        }
    }
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(p: &PropFormula, ctx: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let (prec, op, l, r) = match p {
                PropFormula::Atom(k) => return f.write_str(k),
                PropFormula::NegAtom(k) => return write!(f, "~{k}"),
                PropFormula::Top => return f.write_str("top"),
                PropFormula::Bot => return f.write_str("bot"),
                PropFormula::And(l, r) => (2, " & ", l, r),
                PropFormula::Or(l, r) => (1, " | ", l, r),
            };
            if prec < ctx {
                f.write_str("(")?;
            }
            go(l, prec, f)?;
            f.write_str(op)?;
            go(r, prec + 1, f)?;
            if prec < ctx {
                f.write_str(")")?;
            }
            Ok(())
        }
        go(self, 0, f)
    }
}

/// Which constants replace surface quantifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropMode {
    /// `exists` to `bot`, `forall` to `top`.
    Standard,
    /// Both to `top`.
    Max,
    /// Both to `bot`.
    Min,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot propositionalize a formula with free variables")]
pub struct OpenFormula;

fn approximate(f: &Formula, mode: PropMode) -> PropFormula {
    match f {
        Formula::Atom(a) => PropFormula::Atom(a.to_string()),
        Formula::NegAtom(a) => PropFormula::NegAtom(a.to_string()),
        Formula::Top => PropFormula::Top,
        Formula::Bot => PropFormula::Bot,
        Formula::And(l, r) => PropFormula::and(approximate(l, mode), approximate(r, mode)),
        Formula::Or(l, r) => PropFormula::or(approximate(l, mode), approximate(r, mode)),
        Formula::Forall(..) => match mode {
            PropMode::Standard | PropMode::Max => PropFormula::Top,
            PropMode::Min => PropFormula::Bot,
        },
        Formula::Exists(..) => match mode {
            PropMode::Max => PropFormula::Top,
            PropMode::Standard | PropMode::Min => PropFormula::Bot,
        },
    }
}

pub fn propositionalize_with(f: &Formula, mode: PropMode) -> Result<PropFormula, OpenFormula> {
    if !f.is_closed() {
        return Err(OpenFormula);
    }
    Ok(approximate(f, mode))
}

pub fn propositionalize(f: &Formula) -> Result<PropFormula, OpenFormula> {
    propositionalize_with(f, PropMode::Standard)
}

pub fn max_propositionalize(f: &Formula) -> Result<PropFormula, OpenFormula> {
    propositionalize_with(f, PropMode::Max)
}

pub fn min_propositionalize(f: &Formula) -> Result<PropFormula, OpenFormula> {
    propositionalize_with(f, PropMode::Min)
}

/// Left-associated disjunction of the members' approximations.
pub fn sequent_prop(s: &Sequent, mode: PropMode) -> PropFormula {
    let mut members = s.members().iter().map(|m| approximate(m, mode));
    let first = members.next().expect("sequents are non-empty");
    members.fold(first, PropFormula::or)
}

/// True iff `p` holds under every assignment to its letters.
pub fn is_tautology(p: &PropFormula) -> bool {
    sat::is_tautology(p)
}

/// The three verdicts that drive rule selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub min_p_valid: bool,
    pub stable: bool,
    pub max_p_invalid: bool,
}

impl Classification {
    pub fn unstable(&self) -> bool {
        !self.stable
    }
}

pub fn is_stable(s: &Sequent) -> bool {
    is_tautology(&sequent_prop(s, PropMode::Standard))
}

pub fn is_min_p_valid(s: &Sequent) -> bool {
    is_tautology(&sequent_prop(s, PropMode::Min))
}

pub fn is_max_p_invalid(s: &Sequent) -> bool {
    !is_tautology(&sequent_prop(s, PropMode::Max))
}

pub fn classify(s: &Sequent) -> Classification {
    Classification {
        min_p_valid: is_min_p_valid(s),
        stable: is_stable(s),
        max_p_invalid: is_max_p_invalid(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{read_derived_sequent, read_formula, read_sequent};
    use alloc::vec;

    fn seq(text: &str) -> Sequent {
        Sequent::new(read_sequent(text).unwrap()).unwrap()
    }

    fn dseq(text: &str) -> Sequent {
        Sequent::new(read_derived_sequent(text).unwrap()).unwrap()
    }

    #[test]
    fn standard_approximation() {
        let f = read_formula("forall x. exists y. (p(x) -> p(y))").unwrap();
        assert_eq!(propositionalize(&f).unwrap(), PropFormula::Top);
        let g = read_derived_sequent("~p(_a1) | forall y. p(y)").unwrap();
        assert_eq!(
            propositionalize(&g[0]).unwrap(),
            PropFormula::or(PropFormula::neg_atom("p(_a1)"), PropFormula::Top)
        );
        let h = read_formula("exists x. q(x)").unwrap();
        assert_eq!(propositionalize(&h).unwrap(), PropFormula::Bot);
    }

    #[test]
    fn open_formula_is_rejected() {
        let open = Formula::atom("p", vec![crate::term::Term::var("x")]);
        assert_eq!(propositionalize(&open), Err(OpenFormula));
    }

    #[test]
    fn max_and_min_approximations() {
        let f = read_formula("p(b) & exists x. q(x)").unwrap();
        assert_eq!(
            max_propositionalize(&f).unwrap(),
            PropFormula::and(PropFormula::atom("p(b)"), PropFormula::Top)
        );
        let g = read_formula("exists x. p(x)").unwrap();
        assert_eq!(max_propositionalize(&g).unwrap(), PropFormula::Top);
        assert_eq!(min_propositionalize(&g).unwrap(), PropFormula::Bot);
        let h = read_formula("(forall y. p(y)) | ~p(a)").unwrap();
        assert_eq!(
            min_propositionalize(&h).unwrap(),
            PropFormula::or(PropFormula::Bot, PropFormula::neg_atom("p(a)"))
        );
        let qf = read_formula("~p(a) | p(a)").unwrap();
        for mode in [PropMode::Standard, PropMode::Max, PropMode::Min] {
            assert_eq!(
                propositionalize_with(&qf, mode).unwrap(),
                PropFormula::or(PropFormula::neg_atom("p(a)"), PropFormula::atom("p(a)"))
            );
        }
    }

    #[test]
    fn sequent_disjunction() {
        let s = seq("~p(a) | p(a), exists x. q(x)");
        assert_eq!(
            sequent_prop(&s, PropMode::Standard),
            PropFormula::or(
                PropFormula::or(PropFormula::neg_atom("p(a)"), PropFormula::atom("p(a)")),
                PropFormula::Bot
            )
        );
        let s = seq("p(a), p(b) & exists x. q(x)");
        assert_eq!(
            sequent_prop(&s, PropMode::Max),
            PropFormula::or(
                PropFormula::atom("p(a)"),
                PropFormula::and(PropFormula::atom("p(b)"), PropFormula::Top)
            )
        );
        assert_eq!(
            sequent_prop(&seq("top"), PropMode::Standard),
            PropFormula::Top
        );
    }

    #[test]
    fn tautologies() {
        let excluded_middle =
            PropFormula::or(PropFormula::neg_atom("p(a)"), PropFormula::atom("p(a)"));
        assert!(is_tautology(&excluded_middle));
        let open = PropFormula::or(PropFormula::neg_atom("p(_a1)"), PropFormula::atom("p(_a2)"));
        assert!(!is_tautology(&open));
        let line_one = PropFormula::or(
            PropFormula::or(PropFormula::neg_atom("p(_a1)"), PropFormula::atom("p(a)")),
            PropFormula::or(PropFormula::neg_atom("p(_a2)"), PropFormula::atom("p(_a1)")),
        );
        assert!(is_tautology(&line_one));
        assert!(is_tautology(&PropFormula::Top));
        assert!(!is_tautology(&PropFormula::Bot));
        let distributive = PropFormula::or(
            PropFormula::and(PropFormula::neg_atom("p"), PropFormula::neg_atom("q")),
            PropFormula::or(PropFormula::atom("p"), PropFormula::atom("q")),
        );
        assert!(is_tautology(&distributive));
    }

    #[test]
    fn classification_examples() {
        let c = classify(&seq("exists y. forall x. (p(x) -> p(y))"));
        assert_eq!(
            c,
            Classification {
                min_p_valid: false,
                stable: false,
                max_p_invalid: false
            }
        );
        assert!(classify(&seq("p(a), p(b) & exists x. q(x)")).max_p_invalid);
        let c = classify(&seq("~p(a) | p(a), exists x. q(x)"));
        assert!(c.min_p_valid && c.stable && !c.max_p_invalid);
        let c = classify(&dseq("~p(_a1), p(_a2)"));
        assert!(c.unstable() && c.max_p_invalid);
    }

    #[test]
    fn prop_display() {
        let p = PropFormula::and(
            PropFormula::or(PropFormula::atom("p"), PropFormula::Bot),
            PropFormula::neg_atom("q"),
        );
        assert_eq!(p.to_string(), "(p | bot) & ~q");
    }
}
