//! Derivation artifacts shared by the search engine and the checker.

use alloc::vec::Vec;
use core::fmt;

use crate::formula::Path;
use crate::sequent::Sequent;
use crate::term::Term;

/// Which rule table governs a derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Success needs a stable sequent without surface `forall`; failure needs
    /// an unstable sequent without surface `exists`.
    Lkg,
    /// Adds the min-p-valid success test and the max-p-invalid failure test.
    #[default]
    LkgPrime,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Lkg => "lkg",
            Mode::LkgPrime => "lkgp",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "lkg" => Some(Mode::Lkg),
            "lkgp" => Some(Mode::LkgPrime),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A rule application read from conclusion to premise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Instantiate the surface `forall` at `path` of member `member` with a
    /// constant that occurs nowhere in the sequent.
    ForallChoose {
        member: usize,
        path: Path,
        fresh: alloc::string::String,
    },
    /// Instantiate the surface `exists` at `path` with a closed witness.
    ExistsChoose {
        member: usize,
        path: Path,
        witness: Term,
    },
    /// Duplicate a member that has a surface `exists`.
    Replicate { member: usize },
}

impl Move {
    pub fn member(&self) -> usize {
        match self {
            Move::ForallChoose { member, .. }
            | Move::ExistsChoose { member, .. }
            | Move::Replicate { member } => *member,
        }
    }

    pub fn rule(&self) -> Rule {
        match self {
            Move::ForallChoose { .. } => Rule::ForallChoose,
            Move::ExistsChoose { .. } => Rule::ExistsChoose,
            Move::Replicate { .. } => Rule::Replicate,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::ForallChoose {
                member,
                path,
                fresh,
            } => {
                write!(f, "forall-choose member {member} at {path:?} with {fresh}")
            }
            Move::ExistsChoose {
                member,
                path,
                witness,
            } => {
                write!(
                    f,
                    "exists-choose member {member} at {path:?} with {witness}"
                )
            }
            Move::Replicate { member } => write!(f, "replicate member {member}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Succ,
    ForallChoose,
    ExistsChoose,
    Replicate,
}

impl Rule {
    /// Name used in the JSON schema.
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Succ => "Succ",
            Rule::ForallChoose => "ForallChoose",
            Rule::ExistsChoose => "ExistsChoose",
            Rule::Replicate => "Replicate",
        }
    }

    pub fn parse(s: &str) -> Option<Rule> {
        match s {
            "Succ" => Some(Rule::Succ),
            "ForallChoose" => Some(Rule::ForallChoose),
            "ExistsChoose" => Some(Rule::ExistsChoose),
            "Replicate" => Some(Rule::Replicate),
            _ => None,
        }
    }

    /// Label for numbered derivation listings.
    pub fn label(self) -> &'static str {
        match self {
            Rule::Succ => "Succ",
            Rule::ForallChoose => "∀-Choose",
            Rule::ExistsChoose => "∃-Choose",
            Rule::Replicate => "Replicate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Inference {
    Succ,
    Move(Move),
}

impl Inference {
    pub fn rule(&self) -> Rule {
        match self {
            Inference::Succ => Rule::Succ,
            Inference::Move(m) => m.rule(),
        }
    }
}

/// One derivation line: the rule's conclusion together with the inference
/// that derives it from the line above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub inference: Inference,
    pub sequent: Sequent,
}

/// Lines in top-down order: the first is a `Succ` line (its premise is the
/// implicit `top`), the last one's sequent is the goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub goal: Sequent,
    pub steps: Vec<ProofStep>,
}

impl Proof {
    pub fn rules(&self) -> Vec<Rule> {
        self.steps.iter().map(|s| s.inference.rule()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    /// Unstable with no surface `exists`.
    FailRule,
    /// The max approximation is not a tautology.
    MaxPInvalid,
}

impl Terminal {
    pub fn as_str(self) -> &'static str {
        match self {
            Terminal::FailRule => "Fail",
            Terminal::MaxPInvalid => "MaxPInvalid",
        }
    }

    pub fn parse(s: &str) -> Option<Terminal> {
        match s {
            "Fail" => Some(Terminal::FailRule),
            "MaxPInvalid" => Some(Terminal::MaxPInvalid),
            _ => None,
        }
    }
}

/// A forced failure: from the goal only universal moves at stable sequents
/// were available, ending in a sequent that fails outright.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationCertificate {
    pub goal: Sequent,
    /// Each step's sequent is the position the move is applied to; the first
    /// one is the goal.
    pub chain: Vec<ProofStep>,
    pub terminal: Terminal,
    pub terminal_sequent: Sequent,
}
