//! Sequents: non-empty multisets of closed formulas, read disjunctively.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Quantifier};
use crate::syntax::DisplaySequent;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequentError {
    #[error("the empty sequent is not allowed")]
    Empty,
    #[error("member {index} is not closed")]
    NotClosed { index: usize },
}

/// Members keep their order so that moves can address them by index;
/// equality as a multiset is available through [`Sequent::same_multiset`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent(Vec<Formula>);

impl Sequent {
    pub fn new(members: Vec<Formula>) -> Result<Self, SequentError> {
        if members.is_empty() {
            return Err(SequentError::Empty);
        }
        if let Some(index) = members.iter().position(|m| !m.is_closed()) {
            return Err(SequentError::NotClosed { index });
        }
        Ok(Sequent(members))
    }

    pub fn single(f: Formula) -> Result<Self, SequentError> {
        Self::new(alloc::vec![f])
    }

    pub(crate) fn from_members_unchecked(members: Vec<Formula>) -> Self {
        Sequent(members)
    }

    pub fn members(&self) -> &[Formula] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_members(self) -> Vec<Formula> {
        self.0
    }

    /// Equality ignoring member order but counting duplicates.
    pub fn same_multiset(&self, other: &Sequent) -> bool {
        if self.0.len() != other.0.len() {
            return false;
        }
        let mut used = alloc::vec![false; other.0.len()];
        self.0.iter().all(
            |m| match (0..other.0.len()).find(|&j| !used[j] && other.0[j] == *m) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            },
        )
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in &self.0 {
            m.for_each_constant(&mut |c| {
                out.insert(String::from(c));
            });
        }
        out
    }

    pub fn contains_constant(&self, name: &str) -> bool {
        self.0.iter().any(|m| m.contains_constant(name))
    }

    pub fn has_surface(&self, kind: Quantifier) -> bool {
        self.0.iter().any(|m| m.has_surface(kind))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DisplaySequent(&self.0).fmt(f)
    }
}
