//! Problem signatures and closed-term enumeration for witness choice.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::formula::Formula;
use crate::term::{compare_constant_names, compare_terms, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub constants: BTreeSet<String>,
    /// Function symbols of arity at least one.
    pub functions: BTreeSet<(String, usize)>,
    pub predicates: BTreeSet<(String, usize)>,
    /// Witness used when no constant is available at all.
    pub default_constant: String,
}

impl Signature {
    /// Collects the symbols of a sequent. The default constant is `a` unless
    /// that name is already taken by a function or a bound variable.
    pub fn of_members(members: &[Formula]) -> Self {
        let mut constants = BTreeSet::new();
        let mut functions = BTreeSet::new();
        let mut predicates = BTreeSet::new();
        let mut taken = BTreeSet::new();
        for m in members {
            m.for_each_constant(&mut |c| {
                constants.insert(String::from(c));
            });
            m.for_each_function(&mut |f, n| {
                functions.insert((String::from(f), n));
                taken.insert(String::from(f));
            });
            m.for_each_atom(&mut |a| {
                predicates.insert((a.pred.clone(), a.args.len()));
            });
            collect_bound(m, &mut taken);
        }
        let default_constant = core::iter::once(String::from("a"))
            .chain((1..).map(|i| format!("a{i}")))
            .find(|n| !taken.contains(n))
            .unwrap();
        Signature {
            constants,
            functions,
            predicates,
            default_constant,
        }
    }
}

fn collect_bound(f: &Formula, out: &mut BTreeSet<String>) {
    if let Some((_, v, _)) = f.quantifier() {
        out.insert(String::from(v));
    }
    f.children().for_each(|c| collect_bound(c, out));
}

/// All closed terms of depth at most `max_depth` over the signature's
/// constants, `extra_constants` and function symbols, ordered by depth and
/// then symbol-wise. Falls back to the default constant when no constant is
/// available.
pub fn herbrand_terms(
    sig: &Signature,
    extra_constants: &BTreeSet<String>,
    max_depth: usize,
) -> Vec<Term> {
    let mut base: Vec<&String> = sig.constants.union(extra_constants).collect();
    if base.is_empty() {
        base.push(&sig.default_constant);
    }
    base.sort_by(|a, b| compare_constant_names(a, b));

    let mut all: Vec<Term> = base.into_iter().map(|c| Term::Const(c.clone())).collect();
    let mut previous_level = all.len();
    for depth in 2..=max_depth.max(1) {
        let mut level = Vec::new();
        for (f, arity) in &sig.functions {
            let mut args = Vec::with_capacity(*arity);
            tuples(&all, *arity, &mut args, &mut |args: &[Term]| {
                if args.iter().any(|t| t.depth() == depth - 1) {
                    level.push(Term::App(f.clone(), args.to_vec()));
                }
            });
        }
        if level.is_empty() && previous_level == 0 {
            break;
        }
        level.sort_by(compare_terms);
        previous_level = level.len();
        all.extend(level);
    }
    all
}

fn tuples(pool: &[Term], arity: usize, current: &mut Vec<Term>, emit: &mut impl FnMut(&[Term])) {
    if current.len() == arity {
        emit(current);
        return;
    }
    for t in pool {
        current.push(t.clone());
        tuples(pool, arity, current, emit);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sig(constants: &[&str], functions: &[(&str, usize)]) -> Signature {
        Signature {
            constants: constants.iter().map(|c| String::from(*c)).collect(),
            functions: functions
                .iter()
                .map(|(f, n)| (String::from(*f), *n))
                .collect(),
            predicates: BTreeSet::new(),
            default_constant: "a".into(),
        }
    }

    #[test]
    fn single_constant_depth_one() {
        assert_eq!(
            herbrand_terms(&sig(&["a"], &[]), &BTreeSet::new(), 1),
            vec![Term::constant("a")]
        );
    }

    #[test]
    fn unary_function_depth_two() {
        let terms = herbrand_terms(&sig(&["a"], &[("f", 1)]), &BTreeSet::new(), 2);
        assert_eq!(
            terms,
            vec![
                Term::constant("a"),
                Term::app("f", vec![Term::constant("a")])
            ]
        );
    }

    #[test]
    fn default_constant_when_nothing_else() {
        assert_eq!(
            herbrand_terms(&sig(&[], &[]), &BTreeSet::new(), 2),
            vec![Term::constant("a")]
        );
    }

    #[test]
    fn extra_constants_follow_declared_ones() {
        let extra: BTreeSet<String> = ["_a1".into()].into_iter().collect();
        let terms = herbrand_terms(&sig(&["a"], &[]), &extra, 1);
        assert_eq!(terms, vec![Term::constant("a"), Term::constant("_a1")]);
    }

    #[test]
    fn binary_function_level_has_no_duplicates() {
        let terms = herbrand_terms(&sig(&["a", "b"], &[("g", 2)]), &BTreeSet::new(), 3);
        let unique: BTreeSet<String> = terms.iter().map(|t| alloc::format!("{t}")).collect();
        assert_eq!(unique.len(), terms.len());
        assert!(terms.iter().all(Term::is_closed));
        // 2 constants, 4 terms of depth 2, then 6*6 - 2*2 of depth 3
        assert_eq!(terms.len(), 2 + 4 + 32);
        assert!(terms.windows(2).all(|w| w[0].depth() <= w[1].depth()));
    }

    #[test]
    fn default_constant_avoids_bound_names() {
        let f = Formula::exists("a", Formula::atom("p", vec![Term::var("a")]));
        assert_eq!(Signature::of_members(&[f]).default_constant, "a1");
    }
}
