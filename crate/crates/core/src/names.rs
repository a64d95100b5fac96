//! Fresh constants for the universal rule.

use alloc::string::String;

use crate::term::generated_name;

/// Counter behind the generated constants `_a1`, `_a2`, ... of one
/// derivation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NameState {
    counter: u64,
}

impl NameState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn starting_at(counter: u64) -> Self {
        NameState { counter }
    }

    pub fn counter(&self) -> u64 {
        self.counter
    }

    /// Advances past every generated name for which `taken` holds and
    /// returns the first free one.
    pub fn fresh_constant(&mut self, taken: impl Fn(&str) -> bool) -> String {
        loop {
            self.counter += 1;
            let name = generated_name(self.counter);
            if !taken(&name) {
                return name;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn avoid(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn first_name_from_zero() {
        let set = avoid(&["a", "p"]);
        let mut s = NameState::new();
        assert_eq!(s.fresh_constant(|n| set.contains(n)), "_a1");
        assert_eq!(s.counter(), 1);
    }

    #[test]
    fn continues_from_counter() {
        let set = avoid(&["a", "_a1"]);
        let mut s = NameState::starting_at(1);
        assert_eq!(s.fresh_constant(|n| set.contains(n)), "_a2");
    }

    #[test]
    fn skips_colliding_names() {
        let set = avoid(&["_a1"]);
        let mut s = NameState::new();
        assert_eq!(s.fresh_constant(|n| set.contains(n)), "_a2");
    }

    proptest! {
        #[test]
        fn output_is_injective(taken in proptest::collection::btree_set(1u64..40, 0..20), draws in 1usize..30) {
            let taken: BTreeSet<String> = taken.into_iter().map(generated_name).collect();
            let mut s = NameState::new();
            let names: Vec<String> = (0..draws).map(|_| s.fresh_constant(|n| taken.contains(n))).collect();
            let unique: BTreeSet<&String> = names.iter().collect();
            prop_assert_eq!(unique.len(), names.len());
            prop_assert!(names.iter().all(|n| !taken.contains(n)));
        }
    }
}
