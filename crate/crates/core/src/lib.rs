//! Proof search for first-order classical logic in a game-viewed sequent
//! calculus, steered by stability of propositional approximations.
//!
//! Formulas are kept in negation normal form. A sequent is a nonempty list of
//! closed formulas read disjunctively. The engine builds top-down proofs or
//! forced refutations, and an independent checker replays both.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checker;
pub mod engine;
pub mod formula;
pub mod names;
pub mod normalize;
pub mod oracle;
pub mod proof;
pub mod propositional;
pub mod sequent;
pub mod signature;
pub mod syntax;
pub mod term;

pub use checker::{check_proof, check_refutation, CheckError, CheckErrorKind};
pub use engine::{prove, prove_with_stats, SearchConfig, SearchStats, UnknownReason, Verdict};
pub use formula::{Formula, InputFormula, Path, Quantifier};
pub use proof::{Inference, Mode, Move, Proof, ProofStep, RefutationCertificate, Rule, Terminal};
pub use sequent::{Sequent, SequentError};
pub use term::{Atom, Term};
