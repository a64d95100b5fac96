//! JSON and text renderings of proofs and refutation certificates.

use std::fmt::Write as _;

use lkg_core::syntax::{
    parse_term, print_sequent, read_derived_formula, read_derived_sequent, ReadError,
};
use lkg_core::{
    Inference, Mode, Move, Proof, ProofStep, RefutationCertificate, Rule, Sequent, Terminal,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub rule: String,
    pub member: usize,
    pub path: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub term: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fresh: Option<String>,
    pub sequent: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofJson {
    pub goal: String,
    pub mode: String,
    pub steps: Vec<StepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub goal: String,
    pub mode: String,
    pub chain: Vec<StepJson>,
    pub terminal: String,
    pub terminal_sequent: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("{field}: {source}")]
    Read {
        field: String,
        #[source]
        source: ReadError,
    },
}

impl FormatError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

/// A derivation read from disk, with the mode it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Proof(Proof, Mode),
    Refutation(RefutationCertificate, Mode),
}

impl Artifact {
    pub fn goal(&self) -> &Sequent {
        match self {
            Artifact::Proof(p, _) => &p.goal,
            Artifact::Refutation(r, _) => &r.goal,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Artifact::Proof(_, m) | Artifact::Refutation(_, m) => *m,
        }
    }
}

fn members_json(s: &Sequent) -> Vec<String> {
    s.members().iter().map(|m| m.to_string()).collect()
}

fn step_json(step: &ProofStep) -> StepJson {
    let mut out = StepJson {
        rule: step.inference.rule().as_str().into(),
        member: 0,
        path: Vec::new(),
        term: None,
        fresh: None,
        sequent: members_json(&step.sequent),
    };
    if let Inference::Move(m) = &step.inference {
        out.member = m.member();
        match m {
            Move::ForallChoose { path, fresh, .. } => {
                out.path = path.clone();
                out.fresh = Some(fresh.clone());
            }
            Move::ExistsChoose { path, witness, .. } => {
                out.path = path.clone();
                out.term = Some(witness.to_string());
            }
            Move::Replicate { .. } => {}
        }
    }
    out
}

pub fn proof_json(p: &Proof, mode: Mode) -> ProofJson {
    ProofJson {
        goal: print_sequent(p.goal.members()),
        mode: mode.as_str().into(),
        steps: p.steps.iter().map(step_json).collect(),
    }
}

pub fn certificate_json(r: &RefutationCertificate, mode: Mode) -> CertificateJson {
    CertificateJson {
        goal: print_sequent(r.goal.members()),
        mode: mode.as_str().into(),
        chain: r.chain.iter().map(step_json).collect(),
        terminal: r.terminal.as_str().into(),
        terminal_sequent: members_json(&r.terminal_sequent),
    }
}

fn read_mode(text: &str) -> Result<Mode, FormatError> {
    Mode::parse(text).ok_or_else(|| FormatError::field("mode", format!("unknown mode `{text}`")))
}

fn read_goal(text: &str) -> Result<Sequent, FormatError> {
    let members = read_derived_sequent(text).map_err(|source| FormatError::Read {
        field: "goal".into(),
        source,
    })?;
    Sequent::new(members).map_err(|e| FormatError::field("goal", e.to_string()))
}

fn read_members(field: &str, members: &[String]) -> Result<Sequent, FormatError> {
    let parsed = members
        .iter()
        .map(|m| {
            read_derived_formula(m).map_err(|source| FormatError::Read {
                field: field.into(),
                source,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Sequent::new(parsed).map_err(|e| FormatError::field(field, e.to_string()))
}

fn read_step(i: usize, step: &StepJson, where_: &str) -> Result<ProofStep, FormatError> {
    let field = format!("{where_}[{i}]");
    let rule = Rule::parse(&step.rule).ok_or_else(|| {
        FormatError::field(
            format!("{field}.rule"),
            format!("unknown rule `{}`", step.rule),
        )
    })?;
    let missing = |name: &str| FormatError::field(format!("{field}.{name}"), "missing");
    let inference = match rule {
        Rule::Succ => Inference::Succ,
        Rule::ForallChoose => Inference::Move(Move::ForallChoose {
            member: step.member,
            path: step.path.clone(),
            fresh: step.fresh.clone().ok_or_else(|| missing("fresh"))?,
        }),
        Rule::ExistsChoose => {
            let text = step.term.as_deref().ok_or_else(|| missing("term"))?;
            let witness = parse_term(text)
                .map_err(|e| FormatError::field(format!("{field}.term"), e.to_string()))?;
            Inference::Move(Move::ExistsChoose {
                member: step.member,
                path: step.path.clone(),
                witness,
            })
        }
        Rule::Replicate => Inference::Move(Move::Replicate {
            member: step.member,
        }),
    };
    let sequent = read_members(&format!("{field}.sequent"), &step.sequent)?;
    Ok(ProofStep { inference, sequent })
}

pub fn read_proof_json(p: &ProofJson) -> Result<(Proof, Mode), FormatError> {
    let mode = read_mode(&p.mode)?;
    let goal = read_goal(&p.goal)?;
    let steps = p
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| read_step(i, s, "steps"))
        .collect::<Result<_, _>>()?;
    Ok((Proof { goal, steps }, mode))
}

pub fn read_certificate_json(
    c: &CertificateJson,
) -> Result<(RefutationCertificate, Mode), FormatError> {
    let mode = read_mode(&c.mode)?;
    let goal = read_goal(&c.goal)?;
    let chain = c
        .chain
        .iter()
        .enumerate()
        .map(|(i, s)| read_step(i, s, "chain"))
        .collect::<Result<_, _>>()?;
    let terminal = Terminal::parse(&c.terminal).ok_or_else(|| {
        FormatError::field("terminal", format!("unknown terminal `{}`", c.terminal))
    })?;
    let terminal_sequent = read_members("terminal_sequent", &c.terminal_sequent)?;
    Ok((
        RefutationCertificate {
            goal,
            chain,
            terminal,
            terminal_sequent,
        },
        mode,
    ))
}

/// Reads either artifact kind; a `chain` field marks a certificate.
pub fn read_artifact(text: &str) -> Result<Artifact, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("chain").is_some() {
        let c: CertificateJson = serde_json::from_value(value)?;
        let (r, mode) = read_certificate_json(&c)?;
        Ok(Artifact::Refutation(r, mode))
    } else {
        let p: ProofJson = serde_json::from_value(value)?;
        let (proof, mode) = read_proof_json(&p)?;
        Ok(Artifact::Proof(proof, mode))
    }
}

fn line(out: &mut String, n: usize, s: &Sequent, label: &str) {
    let _ = writeln!(out, "{n}. {}  {label}", print_sequent(s.members()));
}

/// Numbered lines, premise first; each line names the rule that derives it.
pub fn proof_text(p: &Proof) -> String {
    let mut out = String::new();
    for (i, step) in p.steps.iter().enumerate() {
        line(
            &mut out,
            i + 1,
            &step.sequent,
            step.inference.rule().label(),
        );
    }
    out
}

/// The forced chain from the goal, then the failing sequent.
pub fn certificate_text(r: &RefutationCertificate) -> String {
    let mut out = String::new();
    for (i, step) in r.chain.iter().enumerate() {
        line(
            &mut out,
            i + 1,
            &step.sequent,
            step.inference.rule().label(),
        );
    }
    line(
        &mut out,
        r.chain.len() + 1,
        &r.terminal_sequent,
        r.terminal.as_str(),
    );
    out
}
