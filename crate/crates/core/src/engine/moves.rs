use alloc::string::String;
use alloc::vec::Vec;

use crate::formula::{Formula, Quantifier};
use crate::names::NameState;
use crate::proof::{Mode, Move};
use crate::propositional::Classification;
use crate::sequent::Sequent;
use crate::signature::{herbrand_terms, Signature};

use super::SearchConfig;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("member {member} does not exist")]
    NoSuchMember { member: usize },
    #[error("path {path:?} of member {member} is not a surface occurrence")]
    NotSurface { member: usize, path: Vec<u8> },
    #[error("path {path:?} of member {member} does not address a {expected:?} subformula")]
    WrongQuantifier {
        member: usize,
        path: Vec<u8>,
        expected: Quantifier,
    },
    #[error("constant {name} already occurs in the sequent")]
    NotFresh { name: String },
    #[error("witness {witness} is not a closed term")]
    OpenWitness { witness: String },
    #[error("member {member} has no surface existential to replicate")]
    NothingToReplicate { member: usize },
}

fn instantiate(
    s: &Sequent,
    member: usize,
    path: &[u8],
    kind: Quantifier,
    by: &crate::term::Term,
) -> Result<Sequent, RuleError> {
    let target = s
        .members()
        .get(member)
        .ok_or(RuleError::NoSuchMember { member })?;
    let not_surface = || RuleError::NotSurface {
        member,
        path: path.to_vec(),
    };
    if !target.is_surface_path(path) {
        return Err(not_surface());
    }
    let node = target.subformula_at(path).map_err(|_| not_surface())?;
    let (found, var, body) =
        node.quantifier()
            .filter(|(q, ..)| *q == kind)
            .ok_or(RuleError::WrongQuantifier {
                member,
                path: path.to_vec(),
                expected: kind,
            })?;
    debug_assert_eq!(found, kind);
    let replaced = target
        .replace_at(path, body.substitute(var, by))
        .map_err(|_| not_surface())?;
    let mut members = s.members().to_vec();
    members[member] = replaced;
    Ok(Sequent::from_members_unchecked(members))
}

/// Applies a move to its conclusion sequent, producing the premise.
pub fn apply_move(s: &Sequent, m: &Move) -> Result<Sequent, RuleError> {
    match m {
        Move::ForallChoose {
            member,
            path,
            fresh,
        } => {
            if s.contains_constant(fresh) {
                return Err(RuleError::NotFresh {
                    name: fresh.clone(),
                });
            }
            let c = crate::term::Term::Const(fresh.clone());
            instantiate(s, *member, path, Quantifier::Forall, &c)
        }
        Move::ExistsChoose {
            member,
            path,
            witness,
        } => {
            if !witness.is_closed() {
                return Err(RuleError::OpenWitness {
                    witness: alloc::format!("{witness}"),
                });
            }
            instantiate(s, *member, path, Quantifier::Exists, witness)
        }
        Move::Replicate { member } => {
            let target = s
                .members()
                .get(*member)
                .ok_or(RuleError::NoSuchMember { member: *member })?;
            if !target.has_surface(Quantifier::Exists) {
                return Err(RuleError::NothingToReplicate { member: *member });
            }
            let mut members = s.members().to_vec();
            members.push(target.clone());
            Ok(Sequent::from_members_unchecked(members))
        }
    }
}

/// The leftmost-outermost surface universal, if any.
pub fn first_surface_forall(s: &Sequent) -> Option<(usize, Vec<u8>)> {
    s.members().iter().enumerate().find_map(|(i, m)| {
        m.surface_occurrences(Quantifier::Forall)
            .into_iter()
            .next()
            .map(|(p, _)| (i, p))
    })
}

/// Moves available at a position.
///
/// At a stable position this is the single forced universal move (empty when
/// `Succ` applies). At an unstable one it is every existential instance,
/// members and occurrences left to right and witnesses in enumeration order,
/// followed by a `Replicate` for each member whose replication budget is not
/// spent; empty when no surface existential exists.
///
/// `replicates_used[i]` is the number of replications already charged to
/// the original goal member that member `i` descends from.
pub fn legal_moves(
    s: &Sequent,
    c: &Classification,
    cfg: &SearchConfig,
    sig: &Signature,
    replicates_used: &[usize],
    names: &NameState,
) -> Vec<Move> {
    if c.stable {
        if cfg.mode == Mode::LkgPrime && c.min_p_valid {
            return Vec::new();
        }
        return match first_surface_forall(s) {
            Some((member, path)) => {
                let fresh = names
                    .clone()
                    .fresh_constant(|n| s.contains_constant(n) || sig.constants.contains(n));
                alloc::vec![Move::ForallChoose {
                    member,
                    path,
                    fresh
                }]
            }
            None => Vec::new(),
        };
    }
    if cfg.mode == Mode::LkgPrime && c.max_p_invalid {
        return Vec::new();
    }
    let occurrences: Vec<(usize, Vec<u8>)> = s
        .members()
        .iter()
        .enumerate()
        .flat_map(|(i, m)| {
            m.surface_occurrences(Quantifier::Exists)
                .into_iter()
                .map(move |(p, _)| (i, p))
        })
        .collect();
    if occurrences.is_empty() {
        return Vec::new();
    }
    let terms = herbrand_terms(sig, &s.constants(), cfg.max_term_depth);
    let mut moves = Vec::with_capacity(occurrences.len() * terms.len() + s.len());
    for (member, path) in occurrences {
        for t in &terms {
            moves.push(Move::ExistsChoose {
                member,
                path: path.clone(),
                witness: t.clone(),
            });
        }
    }
    for (member, f) in s.members().iter().enumerate() {
        if f.has_surface(Quantifier::Exists)
            && replicates_used.get(member).copied().unwrap_or(0) < cfg.max_replicates
        {
            moves.push(Move::Replicate { member });
        }
    }
    moves
}

pub(crate) fn has_surface_exists(f: &Formula) -> bool {
    f.has_surface(Quantifier::Exists)
}
