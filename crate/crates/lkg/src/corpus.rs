//! The bundled benchmark corpus. Every status was checked against the
//! finite-model oracle: valid entries have no countermodel up to size 3,
//! invalid ones have one.

pub const VALID: &str = include_str!("../corpus/valid.txt");
pub const INVALID: &str = include_str!("../corpus/invalid.txt");
