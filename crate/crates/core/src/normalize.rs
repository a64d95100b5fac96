//! Conversion of user formulas into negation normal form with bound
//! variables renamed apart.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::formula::{Formula, InputFormula};
use crate::term::{Atom, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WellFormednessError {
    #[error("{kind} symbol `{symbol}` used with arity {found} but earlier with arity {expected}")]
    ArityMismatch {
        kind: SymbolKind,
        symbol: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    Function,
    Predicate,
}

impl core::fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            SymbolKind::Function => "function",
            SymbolKind::Predicate => "predicate",
        })
    }
}

/// Arity table shared by the members of one problem. Constants are
/// functions of arity zero.
#[derive(Debug, Default)]
struct Arities {
    functions: BTreeMap<String, usize>,
    predicates: BTreeMap<String, usize>,
}

impl Arities {
    fn record(
        &mut self,
        kind: SymbolKind,
        name: &str,
        arity: usize,
    ) -> Result<(), WellFormednessError> {
        let table = match kind {
            SymbolKind::Function => &mut self.functions,
            SymbolKind::Predicate => &mut self.predicates,
        };
        match table.get(name) {
            Some(&expected) if expected != arity => Err(WellFormednessError::ArityMismatch {
                kind,
                symbol: name.into(),
                expected,
                found: arity,
            }),
            Some(_) => Ok(()),
            None => {
                table.insert(name.into(), arity);
                Ok(())
            }
        }
    }

    fn term(&mut self, t: &Term) -> Result<(), WellFormednessError> {
        match t {
            Term::Var(_) => Ok(()),
            Term::Const(c) => self.record(SymbolKind::Function, c, 0),
            Term::App(f, args) => {
                self.record(SymbolKind::Function, f, args.len())?;
                args.iter().try_for_each(|a| self.term(a))
            }
        }
    }

    fn formula(&mut self, f: &InputFormula) -> Result<(), WellFormednessError> {
        match f {
            InputFormula::Atom(a) => {
                self.record(SymbolKind::Predicate, &a.pred, a.args.len())?;
                a.args.iter().try_for_each(|t| self.term(t))
            }
            InputFormula::Not(g) | InputFormula::Forall(_, g) | InputFormula::Exists(_, g) => {
                self.formula(g)
            }
            InputFormula::And(l, r) | InputFormula::Or(l, r) | InputFormula::Implies(l, r) => {
                self.formula(l)?;
                self.formula(r)
            }
            InputFormula::Top | InputFormula::Bot => Ok(()),
        }
    }
}

/// Normalizes a single formula.
pub fn normalize_to_nnf(f: &InputFormula) -> Result<Formula, WellFormednessError> {
    let mut arities = Arities::default();
    arities.formula(f)?;
    Ok(Normalizer::new(f).run(f))
}

/// Normalizes the members of a sequent, checking arities across all of them.
pub fn normalize_sequent(members: &[InputFormula]) -> Result<Vec<Formula>, WellFormednessError> {
    let mut arities = Arities::default();
    members.iter().try_for_each(|m| arities.formula(m))?;
    Ok(members.iter().map(|m| Normalizer::new(m).run(m)).collect())
}

struct Normalizer {
    used: BTreeSet<String>,
    scope: Vec<(String, String)>,
}

impl Normalizer {
    fn new(f: &InputFormula) -> Self {
        let mut used = BTreeSet::new();
        collect_term_names(f, &mut used);
        Normalizer {
            used,
            scope: Vec::new(),
        }
    }

    fn run(mut self, f: &InputFormula) -> Formula {
        self.nnf(f, true)
    }

    fn bind(&mut self, var: &str) -> String {
        let name = if self.used.contains(var) {
            (1..)
                .map(|i| format!("{var}{i}"))
                .find(|n| !self.used.contains(n))
                .unwrap()
        } else {
            var.into()
        };
        self.used.insert(name.clone());
        self.scope.push((var.into(), name.clone()));
        name
    }

    fn term(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => match self.scope.iter().rev().find(|(orig, _)| orig == v) {
                Some((_, renamed)) => Term::Var(renamed.clone()),
                None => t.clone(),
            },
            Term::Const(_) => t.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| self.term(a)).collect()),
        }
    }

    fn nnf(&mut self, f: &InputFormula, positive: bool) -> Formula {
        match f {
            InputFormula::Atom(a) => {
                let atom = Atom {
                    pred: a.pred.clone(),
                    args: a.args.iter().map(|t| self.term(t)).collect(),
                };
                if positive {
                    Formula::Atom(atom)
                } else {
                    Formula::NegAtom(atom)
                }
            }
            InputFormula::Not(g) => self.nnf(g, !positive),
            InputFormula::Top => {
                if positive {
                    Formula::Top
                } else {
                    Formula::Bot
                }
            }
            InputFormula::Bot => {
                if positive {
                    Formula::Bot
                } else {
                    Formula::Top
                }
            }
            InputFormula::And(l, r) => {
                let (l, r) = (self.nnf(l, positive), self.nnf(r, positive));
                if positive {
                    Formula::and(l, r)
                } else {
                    Formula::or(l, r)
                }
            }
            InputFormula::Or(l, r) => {
                let (l, r) = (self.nnf(l, positive), self.nnf(r, positive));
                if positive {
                    Formula::or(l, r)
                } else {
                    Formula::and(l, r)
                }
            }
            InputFormula::Implies(l, r) => {
                let (l, r) = (self.nnf(l, !positive), self.nnf(r, positive));
                if positive {
                    Formula::or(l, r)
                } else {
                    Formula::and(l, r)
                }
            }
            InputFormula::Forall(v, body) | InputFormula::Exists(v, body) => {
                let name = self.bind(v);
                let body = Box::new(self.nnf(body, positive));
                self.scope.pop();
                let universal = matches!(f, InputFormula::Forall(..)) == positive;
                if universal {
                    Formula::Forall(name, body)
                } else {
                    Formula::Exists(name, body)
                }
            }
        }
    }
}

fn collect_term_names(f: &InputFormula, out: &mut BTreeSet<String>) {
    fn term(t: &Term, out: &mut BTreeSet<String>) {
        match t {
            Term::Const(c) => {
                out.insert(c.clone());
            }
            // Free variables must not be captured by a renamed binder.
            Term::Var(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| term(a, out)),
        }
    }
    fn free(f: &InputFormula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match f {
            InputFormula::Atom(a) => {
                for t in &a.args {
                    term(t, out);
                    free_vars(t, bound, out);
                }
            }
            InputFormula::Not(g) => free(g, bound, out),
            InputFormula::And(l, r) | InputFormula::Or(l, r) | InputFormula::Implies(l, r) => {
                free(l, bound, out);
                free(r, bound, out);
            }
            InputFormula::Forall(v, g) | InputFormula::Exists(v, g) => {
                bound.push(v.clone());
                free(g, bound, out);
                bound.pop();
            }
            InputFormula::Top | InputFormula::Bot => {}
        }
    }
    fn free_vars(t: &Term, bound: &[String], out: &mut BTreeSet<String>) {
        match t {
            Term::Var(v) if !bound.contains(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| free_vars(a, bound, out)),
            _ => {}
        }
    }
    free(f, &mut Vec::new(), out);
}
