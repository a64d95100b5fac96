//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lkg::corpus;
use lkg::format::{certificate_json, proof_json, proof_text, read_artifact, Artifact};
use lkg::problems::parse_problem_file;
use lkg_core::normalize::normalize_to_nnf;
use lkg_core::oracle::{finite_validity, sequent_formula, taut_truth_table, FiniteValidity};
use lkg_core::propositional::{classify, is_tautology, PropFormula};
use lkg_core::signature::Signature;
use lkg_core::syntax::{
    parse_formula, print_formula, print_input_formula, read_derived_sequent, read_formula,
    read_sequent,
};
use lkg_core::{
    check_proof, check_refutation, prove, Atom, CheckErrorKind, Formula, Inference, InputFormula,
    Mode, Move, Proof, ProofStep, RefutationCertificate, Rule, SearchConfig, Sequent, Term,
    Terminal, UnknownReason, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const FIRST: &str = "forall x. exists y. (p(x) -> p(y))";
const SECOND: &str = "exists y. forall x. (p(x) -> p(y))";
const INVALID: &str = "(exists x. p(x)) -> forall y. p(y)";

fn seq(text: &str) -> Sequent {
    Sequent::new(read_sequent(text).unwrap()).unwrap()
}

fn dseq(text: &str) -> Sequent {
    Sequent::new(read_derived_sequent(text).unwrap()).unwrap()
}

fn lkg() -> SearchConfig {
    SearchConfig {
        mode: Mode::Lkg,
        ..SearchConfig::default()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn proved(v: Verdict) -> Result<Proof, String> {
    match v {
        Verdict::Proved(p) => Ok(p),
        other => Err(format!("expected Proved, got {}", other.name())),
    }
}

fn refuted(v: Verdict) -> Result<RefutationCertificate, String> {
    match v {
        Verdict::Refuted(r) => Ok(r),
        other => Err(format!("expected Refuted, got {}", other.name())),
    }
}

fn first_example() -> Outcome {
    let goal = seq(FIRST);
    let (v, t) = timed(|| prove(&goal, &SearchConfig::default()));
    let p = proved(v)?;
    ensure!(t < Duration::from_secs(1), "took {t:?}");
    let rules = p.rules();
    ensure!(
        rules == [Rule::Succ, Rule::ExistsChoose, Rule::ForallChoose],
        "rules {rules:?}"
    );
    ensure!(
        check_proof(&p, &goal, Mode::LkgPrime).is_ok(),
        "checker rejected the proof"
    );
    Ok(format!("3 lines in {:.1} ms", t.as_secs_f64() * 1e3))
}

fn second_example() -> Outcome {
    let goal = seq(SECOND);
    let (v, t) = timed(|| prove(&goal, &SearchConfig::default()));
    let p = proved(v)?;
    ensure!(t < Duration::from_secs(5), "took {t:?}");
    let labels: Vec<&str> = p.rules().iter().map(|r| r.label()).collect();
    ensure!(
        labels
            == [
                "Succ",
                "∀-Choose",
                "∃-Choose",
                "∀-Choose",
                "∃-Choose",
                "Replicate"
            ],
        "labels {labels:?}"
    );
    let replicates = p.rules().iter().filter(|r| **r == Rule::Replicate).count();
    ensure!(replicates == 1, "{replicates} replications");
    let upward: Vec<String> = p
        .steps
        .iter()
        .rev()
        .filter_map(|s| match &s.inference {
            Inference::Move(Move::ExistsChoose { witness, .. }) => Some(witness.to_string()),
            _ => None,
        })
        .collect();
    let default = Signature::of_members(goal.members()).default_constant;
    ensure!(
        upward == [default.clone(), "_a1".to_string()],
        "witnesses {upward:?}, default constant {default}"
    );
    ensure!(
        check_proof(&p, &goal, Mode::LkgPrime).is_ok(),
        "checker rejected the proof"
    );
    Ok(format!(
        "6 lines, witnesses {} then {} in {:.1} ms",
        upward[0],
        upward[1],
        t.as_secs_f64() * 1e3
    ))
}

fn invalid_example() -> Outcome {
    let goal = seq(INVALID);
    let r = refuted(prove(&goal, &SearchConfig::default()))?;
    let forall_steps = r
        .chain
        .iter()
        .all(|s| matches!(s.inference, Inference::Move(Move::ForallChoose { .. })));
    ensure!(r.chain.len() == 2 && forall_steps, "chain {:?}", r.chain);
    ensure!(
        r.terminal == Terminal::FailRule,
        "terminal {:?}",
        r.terminal
    );
    let shape = Formula::or(
        Formula::neg_atom("p", vec![Term::constant("_a1")]),
        Formula::atom("p", vec![Term::constant("_a2")]),
    );
    ensure!(
        r.terminal_sequent.members() == [shape],
        "terminal sequent {}",
        r.terminal_sequent
    );
    for mode in [Mode::Lkg, Mode::LkgPrime] {
        ensure!(
            check_refutation(&r, &goal, mode).is_ok(),
            "checker rejected the certificate in {mode}"
        );
    }
    let f = sequent_formula(goal.members());
    ensure!(
        finite_validity(&f, 1) == Ok(FiniteValidity::TrueInAll),
        "unexpected size-1 countermodel"
    );
    match finite_validity(&f, 2) {
        Ok(FiniteValidity::Countermodel(m)) if m.size == 2 => {}
        other => return Err(format!("oracle: {other:?}")),
    }
    Ok("two ∀-Choose steps, Fail on ~p(_a1) | p(_a2), countermodel of size 2".into())
}

fn early_refutation() -> Outcome {
    let goal = seq("p(a), p(b) & exists x. q(x)");
    let (v, t) = timed(|| prove(&goal, &SearchConfig::default()));
    let r = refuted(v)?;
    ensure!(
        r.terminal == Terminal::MaxPInvalid,
        "terminal {:?}",
        r.terminal
    );
    ensure!(t < Duration::from_millis(100), "took {t:?}");
    let cfg = SearchConfig {
        max_steps: 10_000,
        ..lkg()
    };
    match prove(&goal, &cfg) {
        Verdict::Unknown {
            reason: UnknownReason::BudgetExhausted,
            ..
        } => {}
        other => return Err(format!("lkg mode gave {other:?}")),
    }
    Ok(format!(
        "lkgp refutes in {:.2} ms, lkg gives up",
        t.as_secs_f64() * 1e3
    ))
}

fn heuristic_limit() -> Outcome {
    let goal = seq("p(a), exists x. p(x)");
    let v = prove(&goal, &SearchConfig::default());
    let Verdict::Unknown { reason, .. } = v else {
        return Err(format!("expected Unknown, got {}", v.name()));
    };
    match finite_validity(&sequent_formula(goal.members()), 1) {
        Ok(FiniteValidity::Countermodel(m)) if m.size == 1 => {}
        other => return Err(format!("oracle: {other:?}")),
    }
    Ok(format!(
        "Unknown({reason}), countermodel of size 1 (known limitation)"
    ))
}

fn corpus_soundness() -> Outcome {
    let valid = parse_problem_file(corpus::VALID);
    let invalid = parse_problem_file(corpus::INVALID);
    ensure!(
        valid.len() >= 15 && invalid.len() >= 15,
        "corpus has {} valid, {} invalid",
        valid.len(),
        invalid.len()
    );
    let mut oracle = Vec::new();
    for (problems, expect_valid) in [(&valid, true), (&invalid, false)] {
        for p in problems {
            let goal = p.goal.clone().map_err(|e| format!("{}: {e}", p.label))?;
            let status = finite_validity(&sequent_formula(goal.members()), 3)
                .map_err(|e| format!("{}: {e}", p.label))?;
            match (&status, expect_valid) {
                (FiniteValidity::TrueInAll, true) => {}
                (FiniteValidity::Countermodel(m), false) if m.size <= 3 => {}
                _ => return Err(format!("{}: oracle says {status:?}", p.label)),
            }
            oracle.push((p.label.clone(), goal, expect_valid));
        }
    }
    let (results, t) = timed(|| {
        let mut out = Vec::new();
        for (label, goal, valid) in &oracle {
            for cfg in [SearchConfig::default(), lkg()] {
                out.push((label, goal, *valid, cfg.mode, prove(goal, &cfg)));
            }
        }
        out
    });
    ensure!(t < Duration::from_secs(60), "took {t:?}");
    let (mut proved, mut refuted) = (0, 0);
    for (label, goal, valid, mode, v) in results {
        match v {
            Verdict::Proved(p) => {
                ensure!(valid, "{label}: Proved but the oracle has a countermodel");
                ensure!(
                    check_proof(&p, goal, mode).is_ok(),
                    "{label}: proof rejected"
                );
                proved += 1;
            }
            Verdict::Refuted(r) => {
                ensure!(
                    !valid,
                    "{label}: Refuted but the oracle finds no countermodel"
                );
                ensure!(
                    check_refutation(&r, goal, mode).is_ok(),
                    "{label}: certificate rejected"
                );
                refuted += 1;
            }
            Verdict::Unknown { .. } => {}
        }
    }
    Ok(format!(
        "{} valid, {} invalid; {proved} proofs, {refuted} refutations over both modes in {:.2} s",
        valid.len(),
        invalid.len(),
        t.as_secs_f64()
    ))
}

fn random_prop(rng: &mut ChaCha8Rng, depth: u32, atoms: usize) -> PropFormula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        let k = format!("a{}", rng.gen_range(0..atoms));
        return match rng.gen_range(0..10) {
            0 => PropFormula::Top,
            1 => PropFormula::Bot,
            2..=5 => PropFormula::NegAtom(k),
            _ => PropFormula::Atom(k),
        };
    }
    let l = random_prop(rng, depth - 1, atoms);
    let r = random_prop(rng, depth - 1, atoms);
    if rng.gen_bool(0.5) {
        PropFormula::and(l, r)
    } else {
        PropFormula::or(l, r)
    }
}

/// Disjunctions of the form `g | ~g`-ish so that tautologies are not rare.
fn random_tautology_candidate(rng: &mut ChaCha8Rng, atoms: usize) -> PropFormula {
    let g = random_prop(rng, 3, atoms);
    let h = random_prop(rng, 3, atoms);
    PropFormula::or(PropFormula::or(g.clone(), negate_prop(&g)), h)
}

fn negate_prop(p: &PropFormula) -> PropFormula {
    match p {
        PropFormula::Atom(k) => PropFormula::NegAtom(k.clone()),
        PropFormula::NegAtom(k) => PropFormula::Atom(k.clone()),
        PropFormula::Top => PropFormula::Bot,
        PropFormula::Bot => PropFormula::Top,
        PropFormula::And(l, r) => PropFormula::or(negate_prop(l), negate_prop(r)),
        PropFormula::Or(l, r) => PropFormula::and(negate_prop(l), negate_prop(r)),
    }
}

fn tautology_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tautologies = 0;
    for i in 0..1000 {
        let atoms = rng.gen_range(1..=10);
        let p = if i % 3 == 0 {
            random_tautology_candidate(&mut rng, atoms)
        } else {
            random_prop(&mut rng, 6, atoms)
        };
        let expected = taut_truth_table(&p).map_err(|e| e.to_string())?;
        ensure!(is_tautology(&p) == expected, "disagreement on {p}");
        tautologies += usize::from(expected);
    }
    Ok(format!(
        "1000 formulas, {tautologies} tautologies, 0 disagreements"
    ))
}

const VARS: [&str; 3] = ["x", "y", "z"];

fn random_term(rng: &mut ChaCha8Rng, depth: u32, bound: &[String]) -> Term {
    if depth > 0 && rng.gen_ratio(1, 5) {
        return Term::app("f", vec![random_term(rng, depth - 1, bound)]);
    }
    if !bound.is_empty() && rng.gen_ratio(2, 3) {
        return Term::Var(bound[rng.gen_range(0..bound.len())].clone());
    }
    Term::constant(["a", "b"][rng.gen_range(0..2)])
}

fn random_atom(rng: &mut ChaCha8Rng, bound: &[String]) -> Atom {
    match rng.gen_range(0..4) {
        0 => Atom::new("q", vec![]),
        1 => Atom::new(
            "r",
            vec![random_term(rng, 1, bound), random_term(rng, 1, bound)],
        ),
        _ => Atom::new("p", vec![random_term(rng, 1, bound)]),
    }
}

/// A closed surface formula: variables only occur under their binders.
fn random_input(rng: &mut ChaCha8Rng, depth: u32, bound: &mut Vec<String>) -> InputFormula {
    if depth == 0 || rng.gen_ratio(1, 5) {
        return match rng.gen_range(0..12) {
            0 => InputFormula::Top,
            1 => InputFormula::Bot,
            _ => InputFormula::Atom(random_atom(rng, bound)),
        };
    }
    let sub = |rng: &mut ChaCha8Rng, bound: &mut Vec<String>| {
        Box::new(random_input(rng, depth - 1, bound))
    };
    match rng.gen_range(0..7) {
        0 => InputFormula::Not(sub(rng, bound)),
        1 => InputFormula::And(sub(rng, bound), sub(rng, bound)),
        2 => InputFormula::Or(sub(rng, bound), sub(rng, bound)),
        3 => InputFormula::Implies(sub(rng, bound), sub(rng, bound)),
        k => {
            let v = VARS[rng.gen_range(0..VARS.len())].to_string();
            bound.push(v.clone());
            let body = sub(rng, bound);
            bound.pop();
            if k == 4 {
                InputFormula::Forall(v, body)
            } else {
                InputFormula::Exists(v, body)
            }
        }
    }
}

fn random_formula(rng: &mut ChaCha8Rng) -> Formula {
    normalize_to_nnf(&random_input(rng, 4, &mut Vec::new())).unwrap()
}

/// Replaces each surface quantifier by the given constant, written against
/// the formula tree rather than the propositional layer.
fn approximate(f: &Formula, exists_to: &Formula, forall_to: &Formula) -> Formula {
    match f {
        Formula::Exists(..) => exists_to.clone(),
        Formula::Forall(..) => forall_to.clone(),
        Formula::And(l, r) => Formula::and(
            approximate(l, exists_to, forall_to),
            approximate(r, exists_to, forall_to),
        ),
        Formula::Or(l, r) => Formula::or(
            approximate(l, exists_to, forall_to),
            approximate(r, exists_to, forall_to),
        ),
        other => other.clone(),
    }
}

fn negate(f: &Formula) -> Formula {
    match f {
        Formula::Atom(a) => Formula::NegAtom(a.clone()),
        Formula::NegAtom(a) => Formula::Atom(a.clone()),
        Formula::Top => Formula::Bot,
        Formula::Bot => Formula::Top,
        Formula::And(l, r) => Formula::or(negate(l), negate(r)),
        Formula::Or(l, r) => Formula::and(negate(l), negate(r)),
        Formula::Forall(v, b) => Formula::exists(v, negate(b)),
        Formula::Exists(v, b) => Formula::forall(v, negate(b)),
    }
}

fn chain_holds(s: &Sequent) -> bool {
    let c = classify(s);
    (!c.min_p_valid || c.stable) && (!c.stable || !c.max_p_invalid)
}

fn sandwich() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut quantified = 0;
    for _ in 0..200 {
        let f = random_formula(&mut rng);
        quantified += usize::from(!f.is_quantifier_free());
        let min = approximate(&f, &Formula::Bot, &Formula::Bot);
        let max = approximate(&f, &Formula::Top, &Formula::Top);
        // min -> f and f -> max hold in every interpretation of size <= 2.
        for (claim, name) in [
            (Formula::or(negate(&min), f.clone()), "min => f"),
            (Formula::or(negate(&f), max), "f => max"),
        ] {
            let status = finite_validity(&claim, 2).map_err(|e| e.to_string())?;
            ensure!(
                status == FiniteValidity::TrueInAll,
                "{name} fails for {f}: {status:?}"
            );
        }
    }
    let mut sequents: Vec<Sequent> =
        parse_problem_file(&format!("{}\n{}", corpus::VALID, corpus::INVALID))
            .into_iter()
            .map(|p| p.goal.unwrap())
            .collect();
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        sequents.push(Sequent::new((0..n).map(|_| random_formula(&mut rng)).collect()).unwrap());
    }
    for s in &sequents {
        ensure!(chain_holds(s), "classification chain broken on {s}");
    }
    Ok(format!(
        "200 formulas ({quantified} quantified), chain on {} sequents, 0 violations",
        sequents.len()
    ))
}

fn expect(
    kind: CheckErrorKind,
    result: Result<(), lkg_core::CheckError>,
    class: &str,
) -> Result<(), String> {
    match result {
        Err(e) if e.kind == kind => Ok(()),
        other => Err(format!("{class}: expected {kind}, got {other:?}")),
    }
}

fn move_at(p: &mut Proof, i: usize) -> &mut Move {
    match &mut p.steps[i].inference {
        Inference::Move(m) => m,
        Inference::Succ => panic!("line {i} is a Succ line"),
    }
}

fn checker_adversarial() -> Outcome {
    use CheckErrorKind::*;
    let first_goal = seq(FIRST);
    let second_goal = seq(SECOND);
    let first = proved(prove(&first_goal, &SearchConfig::default()))?;
    let second = proved(prove(&second_goal, &SearchConfig::default()))?;
    let invalid_goal = seq(INVALID);
    let invalid = refuted(prove(&invalid_goal, &SearchConfig::default()))?;
    let early_goal = seq("p(a), p(b) & exists x. q(x)");
    let early = refuted(prove(&early_goal, &SearchConfig::default()))?;
    let m = Mode::LkgPrime;
    let mut classes = 0;

    // constant reuse
    let mut p = second.clone();
    if let Move::ForallChoose { fresh, .. } = move_at(&mut p, 1) {
        *fresh = "_a1".into();
    }
    expect(NotFresh, check_proof(&p, &second_goal, m), "constant reuse")?;
    classes += 1;

    // non-surface path: the existential under the universal
    let mut p = first.clone();
    if let Move::ForallChoose { path, .. } = move_at(&mut p, 2) {
        *path = vec![0];
    }
    expect(
        NotSurface,
        check_proof(&p, &first_goal, m),
        "non-surface path",
    )?;
    classes += 1;

    // open witness term
    let mut p = first.clone();
    if let Move::ExistsChoose { witness, .. } = move_at(&mut p, 1) {
        *witness = Term::var("y");
    }
    expect(
        NotClosedTerm,
        check_proof(&p, &first_goal, m),
        "open witness",
    )?;
    classes += 1;

    // reordered steps
    let mut p = second.clone();
    p.steps.swap(1, 2);
    expect(
        WrongResultSequent,
        check_proof(&p, &second_goal, m),
        "reordered steps",
    )?;
    classes += 1;

    // wrong terminal: MaxPInvalid relabelled as Fail
    let mut r = early.clone();
    r.terminal = Terminal::FailRule;
    expect(
        BadTerminal,
        check_refutation(&r, &early_goal, m),
        "wrong terminal",
    )?;
    classes += 1;

    // max-p-invalid terminal is not an LKg rule
    expect(
        BadTerminal,
        check_refutation(&early, &early_goal, Mode::Lkg),
        "mode-specific terminal",
    )?;
    classes += 1;

    // goal mismatch
    expect(
        GoalMismatch,
        check_proof(&first, &second_goal, m),
        "goal mismatch",
    )?;
    classes += 1;

    // tampered witness: the rebuilt premise differs from the line above
    let mut p = first.clone();
    if let Move::ExistsChoose { witness, .. } = move_at(&mut p, 1) {
        *witness = Term::constant("b");
    }
    expect(
        WrongResultSequent,
        check_proof(&p, &first_goal, m),
        "wrong witness",
    )?;
    classes += 1;

    // Succ on an unstable line
    let mut p = first.clone();
    p.steps.remove(0);
    p.steps[0].inference = Inference::Succ;
    expect(NotStable, check_proof(&p, &first_goal, m), "premature Succ")?;
    classes += 1;

    // Succ in the middle of a derivation
    let mut p = second.clone();
    p.steps[2].inference = Inference::Succ;
    expect(BadTerminal, check_proof(&p, &second_goal, m), "inner Succ")?;
    classes += 1;

    // existential choice at a stable position
    let goal = seq("p(a) | ~p(a), exists x. q(x)");
    let p = Proof {
        goal: goal.clone(),
        steps: vec![
            ProofStep {
                inference: Inference::Succ,
                sequent: seq("p(a) | ~p(a), q(a)"),
            },
            ProofStep {
                inference: Inference::Move(Move::ExistsChoose {
                    member: 1,
                    path: vec![],
                    witness: Term::constant("a"),
                }),
                sequent: goal.clone(),
            },
        ],
    };
    expect(
        NotUnstable,
        check_proof(&p, &goal, m),
        "existential at stable position",
    )?;
    classes += 1;

    // universal choice at an unstable position
    let goal = seq("p(a) & forall y. q(y)");
    let p = Proof {
        goal: goal.clone(),
        steps: vec![
            ProofStep {
                inference: Inference::Succ,
                sequent: dseq("p(a) & q(_a1)"),
            },
            ProofStep {
                inference: Inference::Move(Move::ForallChoose {
                    member: 0,
                    path: vec![1],
                    fresh: "_a1".into(),
                }),
                sequent: goal.clone(),
            },
        ],
    };
    expect(
        NotStable,
        check_proof(&p, &goal, m),
        "universal at unstable position",
    )?;
    classes += 1;

    // replicating a member without a surface existential
    let mut p = second.clone();
    if let Move::Replicate { member } = move_at(&mut p, 5) {
        *member = 3;
    }
    expect(
        NotSurface,
        check_proof(&p, &second_goal, m),
        "replicate missing member",
    )?;
    classes += 1;

    // certificate chain with a choice in it
    let mut r = invalid.clone();
    r.chain[1].inference = Inference::Move(Move::ExistsChoose {
        member: 0,
        path: vec![1],
        witness: Term::constant("a"),
    });
    expect(
        NotUnstable,
        check_refutation(&r, &invalid_goal, m),
        "choice in chain",
    )?;
    classes += 1;

    // certificate that stops before the failing sequent
    let mut r = invalid.clone();
    r.terminal_sequent = r.chain.pop().unwrap().sequent;
    expect(
        BadTerminal,
        check_refutation(&r, &invalid_goal, m),
        "truncated chain",
    )?;
    classes += 1;

    // every artifact the engine emits is accepted, also after a JSON round trip
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut goals: Vec<Sequent> =
        parse_problem_file(&format!("{}\n{}", corpus::VALID, corpus::INVALID))
            .into_iter()
            .map(|p| p.goal.unwrap())
            .collect();
    goals.extend((0..200).map(|_| Sequent::new(vec![random_formula(&mut rng)]).unwrap()));
    let mut artifacts = 0;
    for goal in &goals {
        for cfg in [
            SearchConfig {
                max_steps: 2000,
                ..SearchConfig::default()
            },
            SearchConfig {
                max_steps: 2000,
                ..lkg()
            },
        ] {
            let json = match prove(goal, &cfg) {
                Verdict::Proved(p) => {
                    ensure!(
                        check_proof(&p, goal, cfg.mode).is_ok(),
                        "engine proof rejected for {goal}"
                    );
                    serde_json::to_string(&proof_json(&p, cfg.mode)).unwrap()
                }
                Verdict::Refuted(r) => {
                    ensure!(
                        check_refutation(&r, goal, cfg.mode).is_ok(),
                        "engine certificate rejected for {goal}"
                    );
                    serde_json::to_string(&certificate_json(&r, cfg.mode)).unwrap()
                }
                Verdict::Unknown { .. } => continue,
            };
            let ok = match read_artifact(&json).map_err(|e| format!("{goal}: {e}"))? {
                Artifact::Proof(p, mode) => check_proof(&p, goal, mode).is_ok(),
                Artifact::Refutation(r, mode) => check_refutation(&r, goal, mode).is_ok(),
            };
            ensure!(ok, "re-read artifact rejected for {goal}");
            artifacts += 1;
        }
    }
    Ok(format!(
        "{classes} mutation classes rejected, {artifacts} engine artifacts accepted"
    ))
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1000 {
        let f = random_input(&mut rng, 5, &mut Vec::new());
        let text = print_input_formula(&f);
        ensure!(
            parse_formula(&text).as_ref() == Ok(&f),
            "round trip failed on {text}"
        );
        let nnf = normalize_to_nnf(&f).unwrap();
        let text = print_formula(&nnf);
        ensure!(
            read_formula(&text).as_ref() == Ok(&nnf),
            "round trip failed on {text}"
        );
    }
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (goal, file) in [(FIRST, "forall_exists.txt"), (SECOND, "exists_forall.txt")] {
        let p = proved(prove(&seq(goal), &SearchConfig::default()))?;
        let expected = fs::read_to_string(golden.join(file)).map_err(|e| e.to_string())?;
        ensure!(
            proof_text(&p) == expected,
            "{file} differs:\n{}",
            proof_text(&p)
        );
    }
    Ok("1000 formulas round-trip, both golden files match".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("first example reproduction", first_example),
        ("second example reproduction", second_example),
        ("invalidity example refuted", invalid_example),
        ("early max-p-invalid refutation", early_refutation),
        ("documented heuristic limit", heuristic_limit),
        ("corpus soundness", corpus_soundness),
        ("tautology checker equivalence", tautology_equivalence),
        ("semantic sandwich and classification chain", sandwich),
        ("checker adversarial suite", checker_adversarial),
        ("parser round trip and golden output", round_trip),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
