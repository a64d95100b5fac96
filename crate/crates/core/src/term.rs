//! First-order terms and atoms.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Prefix reserved for constants introduced by the prover. The parser rejects
/// identifiers starting with `_` in user input.
pub const GENERATED_PREFIX: &str = "_a";

/// Returns the index `k` if `name` is a generated constant `_ak`.
pub fn generated_index(name: &str) -> Option<u64> {
    let digits = name.strip_prefix(GENERATED_PREFIX)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

pub fn generated_name(index: u64) -> String {
    alloc::format!("{GENERATED_PREFIX}{index}")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: &str) -> Self {
        Term::Const(name.into())
    }

    pub fn app(name: &str, args: Vec<Term>) -> Self {
        Term::App(name.into(), args)
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Const(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_closed),
        }
    }

    /// Nesting depth: constants and variables have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub(crate) fn substitute(&self, var: &str, by: &Term) -> Term {
        match self {
            Term::Var(v) if v == var => by.clone(),
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::App(f, args) => Term::App(
                f.clone(),
                args.iter().map(|a| a.substitute(var, by)).collect(),
            ),
        }
    }

    pub(crate) fn has_var(&self, var: &str) -> bool {
        match self {
            Term::Var(v) => v == var,
            Term::Const(_) => false,
            Term::App(_, args) => args.iter().any(|a| a.has_var(var)),
        }
    }

    pub(crate) fn for_each_constant<'a>(&'a self, visit: &mut impl FnMut(&'a str)) {
        match self {
            Term::Var(_) => {}
            Term::Const(c) => visit(c),
            Term::App(_, args) => args.iter().for_each(|a| a.for_each_constant(visit)),
        }
    }

    pub(crate) fn for_each_function<'a>(&'a self, visit: &mut impl FnMut(&'a str, usize)) {
        if let Term::App(f, args) = self {
            visit(f, args.len());
            args.iter().for_each(|a| a.for_each_function(visit));
        }
    }

    pub(crate) fn map_constants(&self, rename: &impl Fn(&str) -> Option<String>) -> Term {
        match self {
            Term::Var(_) => self.clone(),
            Term::Const(c) => match rename(c) {
                Some(new) => Term::Const(new),
                None => self.clone(),
            },
            Term::App(f, args) => Term::App(
                f.clone(),
                args.iter().map(|a| a.map_constants(rename)).collect(),
            ),
        }
    }
}

/// Orders constant names for witness enumeration: user constants
/// alphabetically, then generated constants by their index.
pub fn compare_constant_names(a: &str, b: &str) -> Ordering {
    match (generated_index(a), generated_index(b)) {
        (None, None) => a.cmp(b),
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(&y),
    }
}

/// Depth first, then symbol-wise with constants ordered by
/// [`compare_constant_names`].
pub fn compare_terms(a: &Term, b: &Term) -> Ordering {
    a.depth()
        .cmp(&b.depth())
        .then_with(|| compare_same_depth(a, b))
}

fn compare_same_depth(a: &Term, b: &Term) -> Ordering {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => x.cmp(y),
        (Term::Var(_), _) => Ordering::Less,
        (_, Term::Var(_)) => Ordering::Greater,
        (Term::Const(x), Term::Const(y)) => compare_constant_names(x, y),
        (Term::Const(_), Term::App(..)) => Ordering::Less,
        (Term::App(..), Term::Const(_)) => Ordering::Greater,
        (Term::App(f, xs), Term::App(g, ys)) => f.cmp(g).then_with(|| {
            xs.iter()
                .zip(ys)
                .map(|(x, y)| compare_terms(x, y))
                .find(|o| o.is_ne())
                .unwrap_or_else(|| xs.len().cmp(&ys.len()))
        }),
    }
}

/// A predicate applied to arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: &str, args: Vec<Term>) -> Self {
        Atom {
            pred: pred.into(),
            args,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.args.iter().all(Term::is_closed)
    }

    pub(crate) fn substitute(&self, var: &str, by: &Term) -> Atom {
        Atom {
            pred: self.pred.clone(),
            args: self.args.iter().map(|t| t.substitute(var, by)).collect(),
        }
    }

    pub(crate) fn map_constants(&self, rename: &impl Fn(&str) -> Option<String>) -> Atom {
        Atom {
            pred: self.pred.clone(),
            args: self.args.iter().map(|t| t.map_constants(rename)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn generated_names_round_trip() {
        assert_eq!(generated_name(3), "_a3");
        assert_eq!(generated_index("_a3"), Some(3));
        assert_eq!(generated_index("_a"), None);
        assert_eq!(generated_index("_a01"), None);
        assert_eq!(generated_index("a1"), None);
    }

    #[test]
    fn closedness_and_depth() {
        let t = Term::app(
            "f",
            vec![Term::constant("a"), Term::app("g", vec![Term::var("x")])],
        );
        assert!(!t.is_closed());
        assert_eq!(t.depth(), 3);
        assert!(t.substitute("x", &Term::constant("b")).is_closed());
    }

    #[test]
    fn user_constants_sort_before_generated() {
        let mut names = vec!["_a2", "b", "_a1", "a", "_a10"];
        names.sort_by(|a, b| compare_constant_names(a, b));
        assert_eq!(names, vec!["a", "b", "_a1", "_a2", "_a10"]);
    }
}
