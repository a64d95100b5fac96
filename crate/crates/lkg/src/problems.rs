//! Problem files: one sequent per line, optionally prefixed by `label:`.
//! Blank lines and lines starting with `#` are skipped.

use std::collections::HashSet;

use lkg_core::syntax::{read_sequent, ReadError};
use lkg_core::Sequent;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("label `{0}` is already used")]
    DuplicateLabel(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    /// 1-based line number in the file.
    pub line: usize,
    pub label: String,
    /// The sequent text after the label.
    pub source: String,
    pub goal: Result<Sequent, ProblemError>,
}

fn is_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn split_label(line: &str) -> (Option<&str>, &str) {
    match line.split_once(':') {
        Some((label, rest)) if is_label(label.trim()) => (Some(label.trim()), rest.trim()),
        _ => (None, line),
    }
}

/// Reads every problem line. Unparsable lines are kept with their error so
/// that callers can report them in place.
pub fn parse_problem_file(text: &str) -> Vec<Problem> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let line = i + 1;
        let (label, source) = split_label(trimmed);
        let label = label
            .map(String::from)
            .unwrap_or_else(|| format!("line{line}"));
        let goal = if seen.insert(label.clone()) {
            read_sequent(source)
                .map_err(ProblemError::from)
                .map(|members| Sequent::new(members).expect("parser rejects empty sequents"))
        } else {
            Err(ProblemError::DuplicateLabel(label.clone()))
        };
        out.push(Problem {
            line,
            label,
            source: source.into(),
            goal,
        });
    }
    out
}
