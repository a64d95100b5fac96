//! Independent replay of proofs and refutation certificates.
//!
//! Every side condition is re-evaluated on the rule's conclusion, the lower
//! sequent of the rule schema. Only formula operations and the propositional
//! layer are used here; nothing from the search engine.

use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Quantifier};
use crate::proof::{Inference, Mode, Move, Proof, ProofStep, RefutationCertificate, Terminal};
use crate::propositional::{is_max_p_invalid, is_min_p_valid, is_stable};
use crate::sequent::Sequent;
use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckErrorKind {
    NotStable,
    NotUnstable,
    NotFresh,
    NotSurface,
    NotClosedTerm,
    WrongResultSequent,
    BadTerminal,
    GoalMismatch,
}

impl CheckErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckErrorKind::NotStable => "not-stable",
            CheckErrorKind::NotUnstable => "not-unstable",
            CheckErrorKind::NotFresh => "not-fresh",
            CheckErrorKind::NotSurface => "not-surface",
            CheckErrorKind::NotClosedTerm => "not-closed-term",
            CheckErrorKind::WrongResultSequent => "wrong-result-sequent",
            CheckErrorKind::BadTerminal => "bad-terminal",
            CheckErrorKind::GoalMismatch => "goal-mismatch",
        }
    }
}

/// The first violated condition. `step` counts derivation lines from 1; for
/// certificates the terminal sequent is line `chain.len() + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{} at step {step}", kind.as_str())]
pub struct CheckError {
    pub step: usize,
    pub kind: CheckErrorKind,
}

impl fmt::Display for CheckErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn fail<T>(step: usize, kind: CheckErrorKind) -> Result<T, CheckError> {
    Err(CheckError { step, kind })
}

/// Rebuilds the premise of a quantifier instance, or reports which side
/// condition is broken.
fn instance(
    conclusion: &Sequent,
    member: usize,
    path: &[u8],
    kind: Quantifier,
    by: &Term,
    step: usize,
) -> Result<Sequent, CheckError> {
    let Some(target) = conclusion.members().get(member) else {
        return fail(step, CheckErrorKind::NotSurface);
    };
    if !target.is_surface_path(path) {
        return fail(step, CheckErrorKind::NotSurface);
    }
    let Ok(node) = target.subformula_at(path) else {
        return fail(step, CheckErrorKind::NotSurface);
    };
    let (var, body) = match (node, kind) {
        (Formula::Forall(v, b), Quantifier::Forall)
        | (Formula::Exists(v, b), Quantifier::Exists) => (v, b),
        _ => return fail(step, CheckErrorKind::NotSurface),
    };
    let Ok(rewritten) = target.replace_at(path, body.substitute(var, by)) else {
        return fail(step, CheckErrorKind::NotSurface);
    };
    let mut members: Vec<Formula> = conclusion.members().to_vec();
    members[member] = rewritten;
    Ok(Sequent::from_members_unchecked(members))
}

/// Checks one move against its conclusion and returns the premise it yields.
fn replay_move(
    conclusion: &Sequent,
    m: &Move,
    mode: Mode,
    step: usize,
) -> Result<Sequent, CheckError> {
    match m {
        Move::ForallChoose {
            member,
            path,
            fresh,
        } => {
            if !is_stable(conclusion) {
                return fail(step, CheckErrorKind::NotStable);
            }
            if conclusion.contains_constant(fresh) {
                // Surface check first so a bad path is not misreported.
                instance(
                    conclusion,
                    *member,
                    path,
                    Quantifier::Forall,
                    &Term::Const(fresh.clone()),
                    step,
                )?;
                return fail(step, CheckErrorKind::NotFresh);
            }
            instance(
                conclusion,
                *member,
                path,
                Quantifier::Forall,
                &Term::Const(fresh.clone()),
                step,
            )
        }
        Move::ExistsChoose {
            member,
            path,
            witness,
        } => {
            if is_stable(conclusion) || (mode == Mode::LkgPrime && is_max_p_invalid(conclusion)) {
                return fail(step, CheckErrorKind::NotUnstable);
            }
            if !witness.is_closed() {
                return fail(step, CheckErrorKind::NotClosedTerm);
            }
            instance(conclusion, *member, path, Quantifier::Exists, witness, step)
        }
        Move::Replicate { member } => {
            if is_stable(conclusion) || (mode == Mode::LkgPrime && is_max_p_invalid(conclusion)) {
                return fail(step, CheckErrorKind::NotUnstable);
            }
            let Some(target) = conclusion.members().get(*member) else {
                return fail(step, CheckErrorKind::NotSurface);
            };
            if !target.has_surface(Quantifier::Exists) {
                return fail(step, CheckErrorKind::NotSurface);
            }
            let mut members = conclusion.members().to_vec();
            members.push(target.clone());
            Ok(Sequent::from_members_unchecked(members))
        }
    }
}

fn check_succ(s: &Sequent, mode: Mode, step: usize) -> Result<(), CheckError> {
    match mode {
        Mode::Lkg => {
            if !is_stable(s) {
                return fail(step, CheckErrorKind::NotStable);
            }
            if s.has_surface(Quantifier::Forall) {
                return fail(step, CheckErrorKind::BadTerminal);
            }
        }
        Mode::LkgPrime => {
            if !is_min_p_valid(s) {
                return fail(step, CheckErrorKind::NotStable);
            }
        }
    }
    Ok(())
}

/// Verifies that `p` derives `goal` line by line from `top`.
pub fn check_proof(p: &Proof, goal: &Sequent, mode: Mode) -> Result<(), CheckError> {
    let n = p.steps.len();
    let Some(last) = p.steps.last() else {
        return fail(1, CheckErrorKind::BadTerminal);
    };
    if !p.goal.same_multiset(goal) || !last.sequent.same_multiset(goal) {
        return fail(n, CheckErrorKind::GoalMismatch);
    }
    let mut above: Option<&Sequent> = None;
    for (i, ProofStep { inference, sequent }) in p.steps.iter().enumerate() {
        let step = i + 1;
        match (inference, above) {
            (Inference::Succ, None) => check_succ(sequent, mode, step)?,
            (Inference::Succ, Some(_)) | (Inference::Move(_), None) => {
                return fail(step, CheckErrorKind::BadTerminal);
            }
            (Inference::Move(m), Some(premise)) => {
                let rebuilt = replay_move(sequent, m, mode, step)?;
                if !rebuilt.same_multiset(premise) {
                    return fail(step, CheckErrorKind::WrongResultSequent);
                }
            }
        }
        above = Some(sequent);
    }
    Ok(())
}

/// Verifies a forced failure: stable universal steps from the goal down to a
/// terminal sequent that fails outright.
pub fn check_refutation(
    r: &RefutationCertificate,
    goal: &Sequent,
    mode: Mode,
) -> Result<(), CheckError> {
    let first = r.chain.first().map_or(&r.terminal_sequent, |s| &s.sequent);
    if !r.goal.same_multiset(goal) || !first.same_multiset(goal) {
        return fail(1, CheckErrorKind::GoalMismatch);
    }
    for (i, ProofStep { inference, sequent }) in r.chain.iter().enumerate() {
        let step = i + 1;
        if !is_stable(sequent) {
            return fail(step, CheckErrorKind::NotStable);
        }
        let m = match inference {
            Inference::Move(m @ Move::ForallChoose { .. }) => m,
            Inference::Move(_) => return fail(step, CheckErrorKind::NotUnstable),
            Inference::Succ => return fail(step, CheckErrorKind::BadTerminal),
        };
        let rebuilt = replay_move(sequent, m, mode, step)?;
        let next = r
            .chain
            .get(i + 1)
            .map_or(&r.terminal_sequent, |s| &s.sequent);
        if !rebuilt.same_multiset(next) {
            return fail(step, CheckErrorKind::WrongResultSequent);
        }
    }
    let step = r.chain.len() + 1;
    let terminal = &r.terminal_sequent;
    let ok = match r.terminal {
        Terminal::FailRule => !is_stable(terminal) && !terminal.has_surface(Quantifier::Exists),
        Terminal::MaxPInvalid => mode == Mode::LkgPrime && is_max_p_invalid(terminal),
    };
    if !ok {
        return fail(step, CheckErrorKind::BadTerminal);
    }
    Ok(())
}
