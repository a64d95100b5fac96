//! Tautology checking by refutation: the negation is clausified with a
//! polarity-aware Tseitin encoding and handed to a small DPLL loop.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::PropFormula;

type Lit = i32;

struct Encoder<'a> {
    atoms: BTreeMap<&'a str, Lit>,
    next: Lit,
    clauses: Vec<Vec<Lit>>,
}

impl<'a> Encoder<'a> {
    fn fresh(&mut self) -> Lit {
        self.next += 1;
        self.next
    }

    fn atom(&mut self, key: &'a str) -> Lit {
        if let Some(&v) = self.atoms.get(key) {
            return v;
        }
        let v = self.fresh();
        self.atoms.insert(key, v);
        v
    }

    /// Encodes `f` with its polarity flipped when `negate` is set. Only the
    /// implication gate → subformula is emitted since every gate occurs
    /// positively.
    fn encode(&mut self, f: &'a PropFormula, negate: bool) -> Lit {
        match f {
            PropFormula::Atom(k) => {
                let v = self.atom(k);
                if negate {
                    -v
                } else {
                    v
                }
            }
            PropFormula::NegAtom(k) => {
                let v = self.atom(k);
                if negate {
                    v
                } else {
                    -v
                }
            }
            PropFormula::And(l, r) | PropFormula::Or(l, r) => {
                let conjunctive = matches!(f, PropFormula::And(..)) != negate;
                let (a, b) = (self.encode(l, negate), self.encode(r, negate));
                let g = self.fresh();
                if conjunctive {
                    self.clauses.push(vec![-g, a]);
                    self.clauses.push(vec![-g, b]);
                } else {
                    self.clauses.push(vec![-g, a, b]);
                }
                g
            }
            PropFormula::Top | PropFormula::Bot => {
                unreachable!("constants are folded before encoding")
            }
        }
    }
}

pub(super) fn is_tautology(p: &PropFormula) -> bool {
    let folded = p.fold_constants();
    match folded {
        PropFormula::Top => return true,
        PropFormula::Bot => return false,
        _ => {}
    }
    let mut enc = Encoder {
        atoms: BTreeMap::new(),
        next: 0,
        clauses: Vec::new(),
    };
    let root = enc.encode(&folded, true);
    enc.clauses.push(vec![root]);
    let mut assignment = vec![0i8; enc.next as usize + 1];
    !satisfiable(&enc.clauses, &mut assignment)
}

fn value(assignment: &[i8], lit: Lit) -> i8 {
    let v = assignment[lit.unsigned_abs() as usize];
    if lit > 0 {
        v
    } else {
        -v
    }
}

fn assign(assignment: &mut [i8], lit: Lit) {
    assignment[lit.unsigned_abs() as usize] = if lit > 0 { 1 } else { -1 };
}

/// Unit propagation to a fixpoint; `false` on conflict.
fn propagate(clauses: &[Vec<Lit>], assignment: &mut [i8]) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut satisfied = false;
            for &lit in clause {
                match value(assignment, lit) {
                    1 => {
                        satisfied = true;
                        break;
                    }
                    0 => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                    _ => {}
                }
            }
            if satisfied {
                continue;
            }
            match (open, unassigned) {
                (0, _) => return false,
                (1, Some(lit)) => {
                    assign(assignment, lit);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn satisfiable(clauses: &[Vec<Lit>], assignment: &mut Vec<i8>) -> bool {
    if !propagate(clauses, assignment) {
        return false;
    }
    let branch = clauses
        .iter()
        .filter(|c| !c.iter().any(|&l| value(assignment, l) == 1))
        .find_map(|c| c.iter().copied().find(|&l| value(assignment, l) == 0));
    let Some(lit) = branch else {
        return true;
    };
    for choice in [lit, -lit] {
        let mut trial = assignment.clone();
        assign(&mut trial, choice);
        if satisfiable(clauses, &mut trial) {
            *assignment = trial;
            return true;
        }
    }
    false
}
