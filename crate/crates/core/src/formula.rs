//! Surface formulas, negation-normal-form formulas and positional rewriting.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::term::{Atom, Term};

/// Formula as written by the user, before normalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InputFormula {
    Atom(Atom),
    Not(Box<InputFormula>),
    And(Box<InputFormula>, Box<InputFormula>),
    Or(Box<InputFormula>, Box<InputFormula>),
    Implies(Box<InputFormula>, Box<InputFormula>),
    Forall(String, Box<InputFormula>),
    Exists(String, Box<InputFormula>),
    Top,
    Bot,
}

/// A formula in negation normal form: negation only on atoms, no implication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    NegAtom(Atom),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

/// Child indices from the root of a formula: `0` is the left operand or a
/// quantifier body, `1` the right operand.
pub type Path = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("path {path:?} does not address a subformula")]
pub struct InvalidPath {
    pub path: Path,
}

impl Formula {
    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn forall(var: &str, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: &str, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn atom(pred: &str, args: Vec<Term>) -> Self {
        Formula::Atom(Atom::new(pred, args))
    }

    pub fn neg_atom(pred: &str, args: Vec<Term>) -> Self {
        Formula::NegAtom(Atom::new(pred, args))
    }

    pub fn quantifier(&self) -> Option<(Quantifier, &str, &Formula)> {
        match self {
            Formula::Forall(v, b) => Some((Quantifier::Forall, v, b)),
            Formula::Exists(v, b) => Some((Quantifier::Exists, v, b)),
            _ => None,
        }
    }

    pub fn children(&self) -> impl Iterator<Item = &Formula> {
        let (a, b): (Option<&Formula>, Option<&Formula>) = match self {
            Formula::And(l, r) | Formula::Or(l, r) => (Some(l), Some(r)),
            Formula::Forall(_, body) | Formula::Exists(_, body) => (Some(body), None),
            _ => (None, None),
        };
        a.into_iter().chain(b)
    }

    fn child(&self, index: u8) -> Option<&Formula> {
        match (self, index) {
            (Formula::And(l, _) | Formula::Or(l, _), 0) => Some(l),
            (Formula::And(_, r) | Formula::Or(_, r), 1) => Some(r),
            (Formula::Forall(_, b) | Formula::Exists(_, b), 0) => Some(b),
            _ => None,
        }
    }

    fn child_mut(&mut self, index: u8) -> Option<&mut Formula> {
        match (self, index) {
            (Formula::And(l, _) | Formula::Or(l, _), 0) => Some(l),
            (Formula::And(_, r) | Formula::Or(_, r), 1) => Some(r),
            (Formula::Forall(_, b) | Formula::Exists(_, b), 0) => Some(b),
            _ => None,
        }
    }

    pub fn subformula_at(&self, path: &[u8]) -> Result<&Formula, InvalidPath> {
        path.iter()
            .try_fold(self, |node, &i| node.child(i))
            .ok_or_else(|| InvalidPath {
                path: path.to_vec(),
            })
    }

    /// Returns a copy of `self` with the node at `path` replaced by `by`.
    pub fn replace_at(&self, path: &[u8], by: Formula) -> Result<Formula, InvalidPath> {
        let mut out = self.clone();
        let mut node = &mut out;
        for &i in path {
            node = node.child_mut(i).ok_or_else(|| InvalidPath {
                path: path.to_vec(),
            })?;
        }
        *node = by;
        Ok(out)
    }

    /// True iff following `path` passes through no quantifier before its
    /// endpoint.
    pub fn is_surface_path(&self, path: &[u8]) -> bool {
        let mut node = self;
        for &i in path {
            if node.quantifier().is_some() {
                return false;
            }
            match node.child(i) {
                Some(next) => node = next,
                None => return false,
            }
        }
        true
    }

    /// Quantified subformulas of the given kind not in the scope of any
    /// quantifier, left to right.
    pub fn surface_occurrences(&self, kind: Quantifier) -> Vec<(Path, &Formula)> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_surface(kind, &mut path, &mut out);
        out
    }

    fn collect_surface<'a>(
        &'a self,
        kind: Quantifier,
        path: &mut Path,
        out: &mut Vec<(Path, &'a Formula)>,
    ) {
        match self {
            Formula::And(l, r) | Formula::Or(l, r) => {
                path.push(0);
                l.collect_surface(kind, path, out);
                path.pop();
                path.push(1);
                r.collect_surface(kind, path, out);
                path.pop();
            }
            Formula::Forall(..) if kind == Quantifier::Forall => out.push((path.clone(), self)),
            Formula::Exists(..) if kind == Quantifier::Exists => out.push((path.clone(), self)),
            _ => {}
        }
    }

    pub fn has_surface(&self, kind: Quantifier) -> bool {
        match self {
            Formula::And(l, r) | Formula::Or(l, r) => l.has_surface(kind) || r.has_surface(kind),
            Formula::Forall(..) => kind == Quantifier::Forall,
            Formula::Exists(..) => kind == Quantifier::Exists,
            _ => false,
        }
    }

    /// Replaces every free occurrence of `var` by `by`. `by` must be closed,
    /// so no capture can occur.
    pub fn substitute(&self, var: &str, by: &Term) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(a.substitute(var, by)),
            Formula::NegAtom(a) => Formula::NegAtom(a.substitute(var, by)),
            Formula::Top | Formula::Bot => self.clone(),
            Formula::And(l, r) => Formula::and(l.substitute(var, by), r.substitute(var, by)),
            Formula::Or(l, r) => Formula::or(l.substitute(var, by), r.substitute(var, by)),
            Formula::Forall(v, _) | Formula::Exists(v, _) if v == var => self.clone(),
            Formula::Forall(v, b) => Formula::Forall(v.clone(), Box::new(b.substitute(var, by))),
            Formula::Exists(v, b) => Formula::Exists(v.clone(), Box::new(b.substitute(var, by))),
        }
    }

    pub fn has_free_var(&self, var: &str) -> bool {
        match self {
            Formula::Atom(a) | Formula::NegAtom(a) => a.args.iter().any(|t| t.has_var(var)),
            Formula::Top | Formula::Bot => false,
            Formula::And(l, r) | Formula::Or(l, r) => l.has_free_var(var) || r.has_free_var(var),
            Formula::Forall(v, b) | Formula::Exists(v, b) => v != var && b.has_free_var(var),
        }
    }

    pub fn is_closed(&self) -> bool {
        let mut bound = Vec::new();
        self.closed_under(&mut bound)
    }

    fn closed_under<'a>(&'a self, bound: &mut Vec<&'a str>) -> bool {
        match self {
            Formula::Atom(a) | Formula::NegAtom(a) => {
                a.args.iter().all(|t| term_closed_under(t, bound))
            }
            Formula::Top | Formula::Bot => true,
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.closed_under(bound) && r.closed_under(bound)
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                bound.push(v);
                let ok = b.closed_under(bound);
                bound.pop();
                ok
            }
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => false,
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.is_quantifier_free() && r.is_quantifier_free()
            }
            _ => true,
        }
    }

    pub fn for_each_atom<'a>(&'a self, visit: &mut impl FnMut(&'a Atom)) {
        match self {
            Formula::Atom(a) | Formula::NegAtom(a) => visit(a),
            Formula::Top | Formula::Bot => {}
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.for_each_atom(visit);
                r.for_each_atom(visit);
            }
            Formula::Forall(_, b) | Formula::Exists(_, b) => b.for_each_atom(visit),
        }
    }

    pub fn for_each_constant<'a>(&'a self, visit: &mut impl FnMut(&'a str)) {
        self.for_each_atom(&mut |a: &'a Atom| {
            a.args.iter().for_each(|t| t.for_each_constant(visit))
        });
    }

    pub fn for_each_function<'a>(&'a self, visit: &mut impl FnMut(&'a str, usize)) {
        self.for_each_atom(&mut |a: &'a Atom| {
            a.args.iter().for_each(|t| t.for_each_function(visit))
        });
    }

    pub fn contains_constant(&self, name: &str) -> bool {
        let mut found = false;
        self.for_each_constant(&mut |c| found |= c == name);
        found
    }

    pub(crate) fn map_constants(&self, rename: &impl Fn(&str) -> Option<String>) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(a.map_constants(rename)),
            Formula::NegAtom(a) => Formula::NegAtom(a.map_constants(rename)),
            Formula::Top | Formula::Bot => self.clone(),
            Formula::And(l, r) => Formula::and(l.map_constants(rename), r.map_constants(rename)),
            Formula::Or(l, r) => Formula::or(l.map_constants(rename), r.map_constants(rename)),
            Formula::Forall(v, b) => Formula::Forall(v.clone(), Box::new(b.map_constants(rename))),
            Formula::Exists(v, b) => Formula::Exists(v.clone(), Box::new(b.map_constants(rename))),
        }
    }
}

fn term_closed_under(t: &Term, bound: &[&str]) -> bool {
    match t {
        Term::Var(v) => bound.contains(&v.as_str()),
        Term::Const(_) => true,
        Term::App(_, args) => args.iter().all(|a| term_closed_under(a, bound)),
    }
}

impl From<&Formula> for InputFormula {
    fn from(f: &Formula) -> Self {
        match f {
            Formula::Atom(a) => InputFormula::Atom(a.clone()),
            Formula::NegAtom(a) => InputFormula::Not(Box::new(InputFormula::Atom(a.clone()))),
            Formula::Top => InputFormula::Top,
            Formula::Bot => InputFormula::Bot,
            Formula::And(l, r) => {
                InputFormula::And(Box::new((&**l).into()), Box::new((&**r).into()))
            }
            Formula::Or(l, r) => InputFormula::Or(Box::new((&**l).into()), Box::new((&**r).into())),
            Formula::Forall(v, b) => InputFormula::Forall(v.clone(), Box::new((&**b).into())),
            Formula::Exists(v, b) => InputFormula::Exists(v.clone(), Box::new((&**b).into())),
        }
    }
}
