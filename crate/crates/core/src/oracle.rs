//! Brute-force semantics for small domains: Tarskian evaluation over finite
//! interpretations, exhaustive countermodel search, and truth tables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::formula::Formula;
use crate::propositional::PropFormula;
use crate::term::Term;

/// Default bound on the number of interpretations enumerated per domain size.
pub const DEFAULT_INTERPRETATION_CAP: u64 = 1 << 24;

pub const MAX_TRUTH_TABLE_ATOMS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    pub arity: usize,
    /// Indexed by the argument tuple read as base-`n` digits, first argument
    /// least significant.
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateTable {
    pub arity: usize,
    pub truth: Vec<bool>,
}

/// A finite structure over the domain `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    pub size: usize,
    pub constants: BTreeMap<String, usize>,
    pub functions: BTreeMap<String, FunctionTable>,
    pub predicates: BTreeMap<String, PredicateTable>,
}

fn tuple_index(args: &[usize], size: usize) -> usize {
    args.iter().rev().fold(0, |acc, &a| acc * size + a)
}

fn tuple_at(mut index: usize, arity: usize, size: usize) -> Vec<usize> {
    (0..arity)
        .map(|_| {
            let d = index % size;
            index /= size;
            d
        })
        .collect()
}

impl Interpretation {
    pub fn new(size: usize) -> Self {
        Interpretation {
            size,
            constants: BTreeMap::new(),
            functions: BTreeMap::new(),
            predicates: BTreeMap::new(),
        }
    }

    pub fn with_constant(mut self, name: &str, value: usize) -> Self {
        self.constants.insert(name.into(), value);
        self
    }

    /// Sets a predicate's extension from a set of tuples.
    pub fn with_predicate(mut self, name: &str, arity: usize, tuples: &[&[usize]]) -> Self {
        let mut truth = vec![false; self.size.pow(arity as u32)];
        for t in tuples {
            truth[tuple_index(t, self.size)] = true;
        }
        self.predicates
            .insert(name.into(), PredicateTable { arity, truth });
        self
    }

    pub fn with_function(mut self, name: &str, arity: usize, values: Vec<usize>) -> Self {
        self.functions
            .insert(name.into(), FunctionTable { arity, values });
        self
    }

    /// Extension of a predicate as a set of tuples.
    pub fn extension(&self, pred: &str) -> Option<BTreeSet<Vec<usize>>> {
        let table = self.predicates.get(pred)?;
        Some(
            table
                .truth
                .iter()
                .enumerate()
                .filter(|(_, &t)| t)
                .map(|(i, _)| tuple_at(i, table.arity, self.size))
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("interpretation does not map constant `{0}`")]
    UnmappedConstant(String),
    #[error("interpretation has no {arity}-ary function `{name}`")]
    UnmappedFunction { name: String, arity: usize },
    #[error("interpretation has no {arity}-ary predicate `{name}`")]
    UnmappedPredicate { name: String, arity: usize },
    #[error("variable `{0}` is not bound by the environment")]
    UnboundVariable(String),
}

struct Evaluator<'a> {
    interp: &'a Interpretation,
    env: Vec<(&'a str, usize)>,
}

impl<'a> Evaluator<'a> {
    fn term(&self, t: &'a Term) -> Result<usize, EvalError> {
        match t {
            Term::Var(v) => self
                .env
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .map(|&(_, d)| d)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone())),
            Term::Const(c) => self
                .interp
                .constants
                .get(c)
                .copied()
                .ok_or_else(|| EvalError::UnmappedConstant(c.clone())),
            Term::App(f, args) => {
                let table = self
                    .interp
                    .functions
                    .get(f)
                    .filter(|t| t.arity == args.len())
                    .ok_or_else(|| EvalError::UnmappedFunction {
                        name: f.clone(),
                        arity: args.len(),
                    })?;
                let values = args
                    .iter()
                    .map(|a| self.term(a))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(table.values[tuple_index(&values, self.interp.size)])
            }
        }
    }

    fn atom(&self, a: &'a crate::term::Atom) -> Result<bool, EvalError> {
        let table = self
            .interp
            .predicates
            .get(&a.pred)
            .filter(|t| t.arity == a.args.len())
            .ok_or_else(|| EvalError::UnmappedPredicate {
                name: a.pred.clone(),
                arity: a.args.len(),
            })?;
        let values = a
            .args
            .iter()
            .map(|t| self.term(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(table.truth[tuple_index(&values, self.interp.size)])
    }

    fn formula(&mut self, f: &'a Formula) -> Result<bool, EvalError> {
        Ok(match f {
            Formula::Atom(a) => self.atom(a)?,
            Formula::NegAtom(a) => !self.atom(a)?,
            Formula::Top => true,
            Formula::Bot => false,
            Formula::And(l, r) => self.formula(l)? && self.formula(r)?,
            Formula::Or(l, r) => self.formula(l)? || self.formula(r)?,
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                let universal = matches!(f, Formula::Forall(..));
                for d in 0..self.interp.size {
                    self.env.push((v, d));
                    let value = self.formula(b);
                    self.env.pop();
                    if value? != universal {
                        return Ok(!universal);
                    }
                }
                universal
            }
        })
    }
}

/// Truth of `f` in `interp` with free variables read from `env`.
pub fn eval_formula(
    f: &Formula,
    interp: &Interpretation,
    env: &BTreeMap<String, usize>,
) -> Result<bool, EvalError> {
    let mut ev = Evaluator {
        interp,
        env: env.iter().map(|(k, &v)| (k.as_str(), v)).collect(),
    };
    ev.formula(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteValidity {
    /// No countermodel up to the size bound. Not a validity proof.
    TrueInAll,
    Countermodel(Interpretation),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("domain size {size} needs more than {cap} interpretations")]
    TooLarge { size: usize, cap: u64 },
    #[error("{count} atoms exceed the truth-table limit of {limit}")]
    TooManyAtoms { count: usize, limit: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Default)]
struct Symbols {
    constants: BTreeSet<String>,
    functions: BTreeMap<String, usize>,
    predicates: BTreeMap<String, usize>,
}

impl Symbols {
    fn of(f: &Formula) -> Self {
        let mut s = Symbols::default();
        f.for_each_constant(&mut |c| {
            s.constants.insert(c.into());
        });
        f.for_each_function(&mut |name, arity| {
            s.functions.insert(name.into(), arity);
        });
        f.for_each_atom(&mut |a| {
            s.predicates.insert(a.pred.clone(), a.args.len());
        });
        s
    }
}

#[derive(Clone)]
enum Slot {
    Constant(String),
    Function(String, usize),
    Predicate(String, usize),
}

/// Searches all interpretations with domain sizes `1..=max_n` for one that
/// falsifies the closed formula `f`, in a fixed order: constants first, then
/// function tables, then predicate tables, with the earliest entry varying
/// fastest.
pub fn finite_validity(f: &Formula, max_n: usize) -> Result<FiniteValidity, OracleError> {
    finite_validity_with_cap(f, max_n, DEFAULT_INTERPRETATION_CAP)
}

pub fn finite_validity_with_cap(
    f: &Formula,
    max_n: usize,
    cap: u64,
) -> Result<FiniteValidity, OracleError> {
    let symbols = Symbols::of(f);
    for n in 1..=max_n {
        let mut interp = Interpretation::new(n);
        let mut slots = Vec::new();
        let mut radices = Vec::new();
        for c in &symbols.constants {
            interp.constants.insert(c.clone(), 0);
            slots.push(Slot::Constant(c.clone()));
            radices.push(n);
        }
        for (name, &arity) in &symbols.functions {
            let entries = n.pow(arity as u32);
            interp.functions.insert(
                name.clone(),
                FunctionTable {
                    arity,
                    values: vec![0; entries],
                },
            );
            for e in 0..entries {
                slots.push(Slot::Function(name.clone(), e));
                radices.push(n);
            }
        }
        for (name, &arity) in &symbols.predicates {
            let entries = n.pow(arity as u32);
            interp.predicates.insert(
                name.clone(),
                PredicateTable {
                    arity,
                    truth: vec![false; entries],
                },
            );
            for e in 0..entries {
                slots.push(Slot::Predicate(name.clone(), e));
                radices.push(2);
            }
        }
        let total = radices.iter().try_fold(1u64, |acc, &r| {
            acc.checked_mul(r as u64).filter(|&t| t <= cap)
        });
        if total.is_none() {
            return Err(OracleError::TooLarge { size: n, cap });
        }

        let mut digits = vec![0usize; slots.len()];
        loop {
            if !eval_formula(f, &interp, &BTreeMap::new())? {
                return Ok(FiniteValidity::Countermodel(interp));
            }
            // Increment the mixed-radix counter, first digit fastest.
            let mut i = 0;
            loop {
                if i == digits.len() {
                    break;
                }
                digits[i] += 1;
                let wrapped = digits[i] == radices[i];
                if wrapped {
                    digits[i] = 0;
                }
                let d = digits[i];
                match &slots[i] {
                    Slot::Constant(c) => *interp.constants.get_mut(c).unwrap() = d,
                    Slot::Function(name, e) => {
                        interp.functions.get_mut(name).unwrap().values[*e] = d
                    }
                    Slot::Predicate(name, e) => {
                        interp.predicates.get_mut(name).unwrap().truth[*e] = d == 1
                    }
                }
                if !wrapped {
                    break;
                }
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    Ok(FiniteValidity::TrueInAll)
}

/// The disjunction of a sequent's members, the formula whose validity the
/// sequent asserts.
pub fn sequent_formula(members: &[Formula]) -> Formula {
    let mut it = members.iter().cloned();
    let first = it.next().unwrap_or(Formula::Bot);
    it.fold(first, Formula::or)
}

/// Tautology test by evaluating every assignment.
pub fn taut_truth_table(p: &PropFormula) -> Result<bool, OracleError> {
    let mut keys = BTreeSet::new();
    p.for_each_key(&mut |k| {
        keys.insert(k);
    });
    let keys: Vec<&str> = keys.into_iter().collect();
    if keys.len() > MAX_TRUTH_TABLE_ATOMS {
        return Err(OracleError::TooManyAtoms {
            count: keys.len(),
            limit: MAX_TRUTH_TABLE_ATOMS,
        });
    }
    fn eval(p: &PropFormula, keys: &[&str], mask: u32) -> bool {
        let lookup = |k: &str| mask & (1 << keys.binary_search(&k).unwrap()) != 0;
        match p {
            PropFormula::Atom(k) => lookup(k),
            PropFormula::NegAtom(k) => !lookup(k),
            PropFormula::Top => true,
            PropFormula::Bot => false,
            PropFormula::And(l, r) => eval(l, keys, mask) && eval(r, keys, mask),
            PropFormula::Or(l, r) => eval(l, keys, mask) || eval(r, keys, mask),
        }
    }
    Ok((0..1u32 << keys.len()).all(|mask| eval(p, &keys, mask)))
}
