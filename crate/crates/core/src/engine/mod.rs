//! Proof search.
//!
//! Stability decides who moves. At a stable sequent the only move is the
//! universal one on the leftmost-outermost surface `forall`, which is never
//! a backtrack point. At an unstable sequent the prover picks an existential
//! witness or replicates a member, and these choices are explored depth
//! first. Iterative deepening widens the witness depth and the replication
//! budget round by round.

mod moves;

pub use moves::{apply_move, first_surface_forall, legal_moves, RuleError};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::Quantifier;
use crate::names::NameState;
use crate::proof::{Inference, Mode, Move, Proof, ProofStep, RefutationCertificate, Terminal};
use crate::propositional::{is_max_p_invalid, is_min_p_valid, is_stable, Classification};
use crate::sequent::Sequent;
use crate::signature::Signature;
use crate::term::{generated_index, generated_name};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    /// Deepest witness term tried for an existential.
    pub max_term_depth: usize,
    /// Replications allowed per original goal member, shared by its copies.
    pub max_replicates: usize,
    /// Positions expanded before giving up, across all rounds.
    pub max_steps: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: Mode::LkgPrime,
            max_term_depth: 2,
            max_replicates: 1,
            max_steps: 10_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnknownReason {
    /// The step limit or a deepening ceiling cut the search.
    BudgetExhausted,
    /// Every branch failed, but only after the prover had made choices, so
    /// the failure is not a forced refutation.
    BranchingRefutation,
    Cancelled,
}

impl UnknownReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnknownReason::BudgetExhausted => "budget-exhausted",
            UnknownReason::BranchingRefutation => "branching-refutation",
            UnknownReason::Cancelled => "cancelled",
        }
    }
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchStats {
    /// Positions expanded.
    pub steps: usize,
    /// Longest branch, in rule applications.
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proved(Proof),
    Refuted(RefutationCertificate),
    Unknown {
        reason: UnknownReason,
        stats: SearchStats,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Proved(_) => "Proved",
            Verdict::Refuted(_) => "Refuted",
            Verdict::Unknown { .. } => "Unknown",
        }
    }
}

/// Classification restricted to the tests the mode needs.
fn classify_for(s: &Sequent, mode: Mode) -> Classification {
    match mode {
        Mode::Lkg => Classification {
            min_p_valid: false,
            stable: is_stable(s),
            max_p_invalid: false,
        },
        Mode::LkgPrime => {
            let min_p_valid = is_min_p_valid(s);
            let stable = min_p_valid || is_stable(s);
            let max_p_invalid = !stable && is_max_p_invalid(s);
            Classification {
                min_p_valid,
                stable,
                max_p_invalid,
            }
        }
    }
}

enum Status {
    Succ,
    Dead(Terminal),
    Forced(Move),
    Choice,
}

fn status(
    s: &Sequent,
    c: &Classification,
    mode: Mode,
    sig: &Signature,
    names: &NameState,
) -> Status {
    if c.stable {
        if mode == Mode::LkgPrime && c.min_p_valid {
            return Status::Succ;
        }
        return match first_surface_forall(s) {
            Some((member, path)) => {
                let fresh = names
                    .clone()
                    .fresh_constant(|n| s.contains_constant(n) || sig.constants.contains(n));
                Status::Forced(Move::ForallChoose {
                    member,
                    path,
                    fresh,
                })
            }
            None => Status::Succ,
        };
    }
    if !s.has_surface(Quantifier::Exists) {
        return Status::Dead(Terminal::FailRule);
    }
    if mode == Mode::LkgPrime && c.max_p_invalid {
        return Status::Dead(Terminal::MaxPInvalid);
    }
    Status::Choice
}

/// Searches for a proof or a forced refutation of `goal`.
pub fn prove(goal: &Sequent, cfg: &SearchConfig) -> Verdict {
    prove_with_stats(goal, cfg, &|| false).0
}

/// Like [`prove`], polling `cancel` between expansions.
pub fn prove_with_stats(
    goal: &Sequent,
    cfg: &SearchConfig,
    cancel: &dyn Fn() -> bool,
) -> (Verdict, SearchStats) {
    let sig = Signature::of_members(goal.members());
    let mut search = Search {
        cfg: cfg.clone(),
        sig,
        names: NameState::new(),
        memo: BTreeSet::new(),
        stats: SearchStats::default(),
        cut: false,
        aborted: None,
        cancel,
    };

    if let Some(cert) = search.forced_refutation(goal) {
        return (Verdict::Refuted(cert), search.stats);
    }

    let has_functions = !search.sig.functions.is_empty();
    let depth_ceiling = if has_functions {
        cfg.max_term_depth.max(1)
    } else {
        1
    };
    let mut last_round_cut = false;
    for depth in 1..=depth_ceiling {
        for replicates in 0..=cfg.max_replicates {
            search.cfg.max_term_depth = depth;
            search.cfg.max_replicates = replicates;
            search.memo.clear();
            search.names = NameState::new();
            search.cut = false;
            let node = Node {
                sequent: goal.clone(),
                origins: (0..goal.len()).collect(),
                replicated: alloc::vec![0; goal.len()],
                depth: 0,
            };
            let found = search.explore(&node, has_functions && depth == cfg.max_term_depth);
            if let Some(steps) = found {
                let proof = Proof {
                    goal: goal.clone(),
                    steps,
                };
                return (Verdict::Proved(proof), search.stats);
            }
            if let Some(reason) = search.aborted {
                return (
                    Verdict::Unknown {
                        reason,
                        stats: search.stats,
                    },
                    search.stats,
                );
            }
            last_round_cut = search.cut;
        }
    }
    let reason = if last_round_cut {
        UnknownReason::BudgetExhausted
    } else {
        UnknownReason::BranchingRefutation
    };
    (
        Verdict::Unknown {
            reason,
            stats: search.stats,
        },
        search.stats,
    )
}

struct Node {
    sequent: Sequent,
    /// Goal member each member descends from.
    origins: Vec<usize>,
    /// Replications charged to each goal member.
    replicated: Vec<usize>,
    depth: usize,
}

impl Node {
    fn child(&self, m: &Move, sequent: Sequent) -> Node {
        let mut origins = self.origins.clone();
        let mut replicated = self.replicated.clone();
        if let Move::Replicate { member } = m {
            let origin = self.origins[*member];
            origins.push(origin);
            replicated[origin] += 1;
        }
        Node {
            sequent,
            origins,
            replicated,
            depth: self.depth + 1,
        }
    }

    fn replicates_used(&self) -> Vec<usize> {
        self.origins.iter().map(|&o| self.replicated[o]).collect()
    }

    /// Identifies positions up to member order and an order-preserving
    /// renaming of generated constants.
    fn memo_key(&self) -> MemoKey {
        let mut generated: Vec<u64> = self
            .sequent
            .constants()
            .iter()
            .filter_map(|c| generated_index(c))
            .collect();
        generated.sort_unstable();
        let renaming: BTreeMap<String, String> = generated
            .iter()
            .enumerate()
            .map(|(i, &k)| (generated_name(k), generated_name(i as u64 + 1)))
            .collect();
        let rename = |c: &str| renaming.get(c).cloned();
        let mut members: Vec<(String, usize)> = self
            .sequent
            .members()
            .iter()
            .zip(&self.origins)
            .map(|(m, &o)| (m.map_constants(&rename).to_string(), o))
            .collect();
        members.sort();
        (members, self.replicated.clone())
    }
}

type MemoKey = (Vec<(String, usize)>, Vec<usize>);

struct Search<'a> {
    cfg: SearchConfig,
    sig: Signature,
    names: NameState,
    /// Positions already shown to fail in the current round.
    memo: BTreeSet<MemoKey>,
    stats: SearchStats,
    /// Set when a ceiling withheld a move in the current round.
    cut: bool,
    aborted: Option<UnknownReason>,
    cancel: &'a dyn Fn() -> bool,
}

impl Search<'_> {
    /// Follows the forced universal moves from the goal; returns a
    /// certificate if that chain ends in a failing sequent.
    fn forced_refutation(&mut self, goal: &Sequent) -> Option<RefutationCertificate> {
        let mut names = NameState::new();
        let mut chain = Vec::new();
        let mut current = goal.clone();
        loop {
            let c = classify_for(&current, self.cfg.mode);
            match status(&current, &c, self.cfg.mode, &self.sig, &names) {
                Status::Dead(terminal) => {
                    return Some(RefutationCertificate {
                        goal: goal.clone(),
                        chain,
                        terminal,
                        terminal_sequent: current,
                    });
                }
                Status::Forced(m) => {
                    let next = apply_move(&current, &m)
                        .expect("forced move satisfies its side conditions");
                    if let Move::ForallChoose { fresh, .. } = &m {
                        names = NameState::starting_at(
                            generated_index(fresh).unwrap_or(names.counter()),
                        );
                    }
                    chain.push(ProofStep {
                        inference: Inference::Move(m),
                        sequent: current,
                    });
                    current = next;
                }
                Status::Succ | Status::Choice => return None,
            }
        }
    }

    fn tick(&mut self, depth: usize) -> bool {
        if self.aborted.is_some() {
            return false;
        }
        if (self.cancel)() {
            self.aborted = Some(UnknownReason::Cancelled);
            return false;
        }
        if self.stats.steps >= self.cfg.max_steps {
            self.aborted = Some(UnknownReason::BudgetExhausted);
            return false;
        }
        self.stats.steps += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        true
    }

    /// Returns the derivation lines, `Succ` first, when `node` is provable
    /// within the round's limits.
    fn explore(&mut self, node: &Node, terms_truncated: bool) -> Option<Vec<ProofStep>> {
        if !self.tick(node.depth) {
            return None;
        }
        let c = classify_for(&node.sequent, self.cfg.mode);
        match status(&node.sequent, &c, self.cfg.mode, &self.sig, &self.names) {
            Status::Succ => Some(alloc::vec![ProofStep {
                inference: Inference::Succ,
                sequent: node.sequent.clone()
            }]),
            Status::Dead(_) => None,
            Status::Forced(m) => self.descend(node, m, terms_truncated),
            Status::Choice => {
                let key = node.memo_key();
                if self.memo.contains(&key) {
                    return None;
                }
                let used = node.replicates_used();
                let moves =
                    legal_moves(&node.sequent, &c, &self.cfg, &self.sig, &used, &self.names);
                if terms_truncated {
                    self.cut = true;
                }
                if node
                    .sequent
                    .members()
                    .iter()
                    .zip(&used)
                    .any(|(f, &u)| moves::has_surface_exists(f) && u >= self.cfg.max_replicates)
                {
                    self.cut = true;
                }
                for m in moves {
                    if let Some(steps) = self.descend(node, m, terms_truncated) {
                        return Some(steps);
                    }
                    if self.aborted.is_some() {
                        return None;
                    }
                }
                self.memo.insert(key);
                None
            }
        }
    }

    fn descend(&mut self, node: &Node, m: Move, terms_truncated: bool) -> Option<Vec<ProofStep>> {
        let premise =
            apply_move(&node.sequent, &m).expect("generated move satisfies its side conditions");
        let saved = self.names.clone();
        if let Move::ForallChoose { fresh, .. } = &m {
            self.names = NameState::starting_at(generated_index(fresh).unwrap_or(saved.counter()));
        }
        let child = node.child(&m, premise);
        let result = self.explore(&child, terms_truncated);
        self.names = saved;
        result.map(|mut steps| {
            steps.push(ProofStep {
                inference: Inference::Move(m),
                sequent: node.sequent.clone(),
            });
            steps
        })
    }
}
