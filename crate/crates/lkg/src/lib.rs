//! File formats, corpus runs and the proof game on top of `lkg-core`.

pub mod bench;
pub mod corpus;
pub mod format;
pub mod play;
pub mod problems;
