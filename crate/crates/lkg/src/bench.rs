//! Corpus runs: one search per problem, in parallel, reported in file order.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use lkg_core::{prove_with_stats, Mode, SearchConfig, Terminal, UnknownReason, Verdict};
use rayon::prelude::*;

use crate::problems::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Proved { lines: usize },
    Refuted(Terminal),
    Unknown(UnknownReason),
}

impl Outcome {
    pub fn of(v: &Verdict) -> Outcome {
        match v {
            Verdict::Proved(p) => Outcome::Proved {
                lines: p.steps.len(),
            },
            Verdict::Refuted(r) => Outcome::Refuted(r.terminal),
            Verdict::Unknown { reason, .. } => Outcome::Unknown(*reason),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Proved { .. } => f.write_str("Proved"),
            Outcome::Refuted(t) => write!(f, "Refuted({})", t.as_str()),
            Outcome::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub label: String,
    pub line: usize,
    /// `Err` holds the message for a line that could not be read.
    pub outcome: Result<Outcome, String>,
    pub steps: usize,
    pub time: Duration,
}

pub fn run(problems: &[Problem], cfg: &SearchConfig) -> Vec<Row> {
    problems
        .par_iter()
        .map(|p| {
            let started = Instant::now();
            let (outcome, steps) = match &p.goal {
                Ok(goal) => {
                    let (verdict, stats) = prove_with_stats(goal, cfg, &|| false);
                    (Ok(Outcome::of(&verdict)), stats.steps)
                }
                Err(e) => (Err(e.to_string()), 0),
            };
            Row {
                label: p.label.clone(),
                line: p.line,
                outcome,
                steps,
                time: started.elapsed(),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub proved: usize,
    pub refuted: usize,
    pub unknown: usize,
    pub errors: usize,
}

pub fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary::default();
    for r in rows {
        match r.outcome {
            Ok(Outcome::Proved { .. }) => s.proved += 1,
            Ok(Outcome::Refuted(_)) => s.refuted += 1,
            Ok(Outcome::Unknown(_)) => s.unknown += 1,
            Err(_) => s.errors += 1,
        }
    }
    s
}

fn outcome_cell(r: &Row) -> String {
    match &r.outcome {
        Ok(o) => o.to_string(),
        Err(_) => "error".into(),
    }
}

fn summary_line(out: &mut String, mode: Mode, s: &Summary, total: Duration) {
    let _ = writeln!(
        out,
        "{mode}: {} proved, {} refuted, {} unknown, {} errors in {:.3}s",
        s.proved,
        s.refuted,
        s.unknown,
        s.errors,
        total.as_secs_f64()
    );
}

/// Per-problem table followed by a summary. Malformed lines are listed
/// with their error after the table.
pub fn render(rows: &[Row], mode: Mode) -> String {
    let mut out = String::new();
    if rows.is_empty() {
        out.push_str("no problems\n");
    } else {
        let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0).max(5);
        let _ = writeln!(
            out,
            "{:<width$}  {:<28}  {:>8}  {:>10}",
            "label", "verdict", "steps", "time(ms)"
        );
        for r in rows {
            let _ = writeln!(
                out,
                "{:<width$}  {:<28}  {:>8}  {:>10.3}",
                r.label,
                outcome_cell(r),
                r.steps,
                r.time.as_secs_f64() * 1e3
            );
        }
    }
    errors(&mut out, rows);
    summary_line(
        &mut out,
        mode,
        &summarize(rows),
        rows.iter().map(|r| r.time).sum(),
    );
    out
}

fn errors(out: &mut String, rows: &[Row]) {
    for r in rows {
        if let Err(e) = &r.outcome {
            let _ = writeln!(out, "line {} ({}): {e}", r.line, r.label);
        }
    }
}

/// Side-by-side table for the two modes over the same problems.
pub fn render_comparison(lkg: &[Row], lkgp: &[Row]) -> String {
    let mut out = String::new();
    if lkg.is_empty() {
        out.push_str("no problems\n");
    } else {
        let width = lkg.iter().map(|r| r.label.len()).max().unwrap_or(0).max(5);
        let _ = writeln!(out, "{:<width$}  {:<28}  {:<28}", "label", "lkg", "lkgp");
        for (a, b) in lkg.iter().zip(lkgp) {
            let _ = writeln!(
                out,
                "{:<width$}  {:<28}  {:<28}",
                a.label,
                outcome_cell(a),
                outcome_cell(b)
            );
        }
    }
    errors(&mut out, lkg);
    summary_line(
        &mut out,
        Mode::Lkg,
        &summarize(lkg),
        lkg.iter().map(|r| r.time).sum(),
    );
    summary_line(
        &mut out,
        Mode::LkgPrime,
        &summarize(lkgp),
        lkgp.iter().map(|r| r.time).sum(),
    );
    out
}
