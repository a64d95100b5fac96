//! The proof game as a session: the machine picks existential witnesses and
//! replications at unstable positions, the environment picks the universal
//! instances at stable ones.

use std::io::{self, BufRead, Write};

use lkg_core::engine::{apply_move, legal_moves, RuleError};
use lkg_core::names::NameState;
use lkg_core::propositional::{classify, Classification};
use lkg_core::signature::Signature;
use lkg_core::syntax::print_sequent;
use lkg_core::term::generated_index;
use lkg_core::{
    check_proof, check_refutation, prove, Inference, Mode, Move, Proof, ProofStep, Quantifier,
    RefutationCertificate, SearchConfig, Sequent, Terminal, Verdict,
};

use crate::format::{certificate_text, proof_text};

/// What the rules allow at a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Turn {
    Succ,
    Fail(Terminal),
    /// A stable position: the universal move is determined.
    Forced(Move),
    /// An unstable position with at least one surface existential.
    Choice(Vec<Move>),
}

#[derive(Clone, Debug)]
struct State {
    sequent: Sequent,
    origins: Vec<usize>,
    replicated: Vec<usize>,
    names: NameState,
    /// Moves so far, goal first, each with the sequent it was applied to.
    transcript: Vec<ProofStep>,
    /// Whether the move that produced this state was played automatically.
    auto: bool,
}

#[derive(Clone, Debug)]
pub struct Game {
    goal: Sequent,
    cfg: SearchConfig,
    sig: Signature,
    history: Vec<State>,
    current: State,
}

impl Game {
    pub fn new(goal: Sequent, cfg: SearchConfig) -> Self {
        let sig = Signature::of_members(goal.members());
        let n = goal.len();
        let current = State {
            sequent: goal.clone(),
            origins: (0..n).collect(),
            replicated: vec![0; n],
            names: NameState::new(),
            transcript: Vec::new(),
            auto: false,
        };
        Game {
            goal,
            cfg,
            sig,
            history: Vec::new(),
            current,
        }
    }

    pub fn sequent(&self) -> &Sequent {
        &self.current.sequent
    }

    pub fn mode(&self) -> Mode {
        self.cfg.mode
    }

    pub fn classification(&self) -> Classification {
        classify(&self.current.sequent)
    }

    pub fn turn(&self) -> Turn {
        let s = &self.current.sequent;
        let c = self.classification();
        let lkgp = self.cfg.mode == Mode::LkgPrime;
        let used: Vec<usize> = self
            .current
            .origins
            .iter()
            .map(|&o| self.current.replicated[o])
            .collect();
        let moves = legal_moves(s, &c, &self.cfg, &self.sig, &used, &self.current.names);
        if c.stable {
            return match moves.into_iter().next() {
                Some(m) if !(lkgp && c.min_p_valid) => Turn::Forced(m),
                _ => Turn::Succ,
            };
        }
        if !s.has_surface(Quantifier::Exists) {
            return Turn::Fail(Terminal::FailRule);
        }
        if lkgp && c.max_p_invalid {
            return Turn::Fail(Terminal::MaxPInvalid);
        }
        Turn::Choice(moves)
    }

    /// Plays a move allowed by [`Game::turn`].
    pub fn play(&mut self, m: &Move, auto: bool) -> Result<(), RuleError> {
        let next = apply_move(&self.current.sequent, m)?;
        let mut state = self.current.clone();
        if let Move::Replicate { member } = m {
            let origin = state.origins[*member];
            state.origins.push(origin);
            state.replicated[origin] += 1;
        }
        if let Move::ForallChoose { fresh, .. } = m {
            if let Some(k) = generated_index(fresh) {
                state.names = NameState::starting_at(k.max(state.names.counter()));
            }
        }
        state.transcript.push(ProofStep {
            inference: Inference::Move(m.clone()),
            sequent: self.current.sequent.clone(),
        });
        state.sequent = next;
        state.auto = auto;
        self.history
            .push(std::mem::replace(&mut self.current, state));
        Ok(())
    }

    /// Returns to the position before the last move made by the player,
    /// taking back the automatic moves that followed it.
    pub fn undo(&mut self) -> bool {
        let player_moved = !self.history.is_empty()
            && (!self.current.auto || self.history[1..].iter().any(|s| !s.auto));
        if !player_moved {
            return false;
        }
        loop {
            let was_auto = self.current.auto;
            self.current = self.history.pop().expect("a player move is on the stack");
            if !was_auto {
                return true;
            }
        }
    }

    /// Whether every move so far was forced.
    pub fn forced_only(&self) -> bool {
        self.current
            .transcript
            .iter()
            .all(|s| matches!(s.inference, Inference::Move(Move::ForallChoose { .. })))
    }

    /// The derivation, once the position is a `Succ` position.
    pub fn proof(&self) -> Option<Proof> {
        if self.turn() != Turn::Succ {
            return None;
        }
        let mut steps = vec![ProofStep {
            inference: Inference::Succ,
            sequent: self.current.sequent.clone(),
        }];
        steps.extend(self.current.transcript.iter().rev().cloned());
        Some(Proof {
            goal: self.goal.clone(),
            steps,
        })
    }

    /// A certificate, when the position fails and no choice was made on the
    /// way.
    pub fn certificate(&self) -> Option<RefutationCertificate> {
        let Turn::Fail(terminal) = self.turn() else {
            return None;
        };
        if !self.forced_only() {
            return None;
        }
        Some(RefutationCertificate {
            goal: self.goal.clone(),
            chain: self.current.transcript.clone(),
            terminal,
            terminal_sequent: self.current.sequent.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Role {
    /// The player chooses existential witnesses and replications.
    #[default]
    Machine,
    /// The player steps through universal moves; the prover answers.
    Env,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ending {
    Proved(Proof),
    /// The game reached a failing position. The certificate is present
    /// when the failure was forced.
    Failed(Terminal, Option<RefutationCertificate>),
    /// The prover found no winning move for the machine.
    Resigned(Verdict),
    Quit,
}

fn show_position(out: &mut impl Write, game: &Game) -> io::Result<()> {
    let c = game.classification();
    writeln!(out)?;
    for (i, m) in game.sequent().members().iter().enumerate() {
        writeln!(out, "  [{i}] {m}")?;
    }
    writeln!(
        out,
        "  {} | min-p-valid: {} | max-p-invalid: {}",
        if c.stable { "stable" } else { "unstable" },
        c.min_p_valid,
        c.max_p_invalid
    )
}

fn describe(m: &Move) -> String {
    match m {
        Move::ForallChoose { member, fresh, .. } => format!("∀-Choose on [{member}] with {fresh}"),
        Move::ExistsChoose {
            member,
            witness,
            path,
        } if path.is_empty() => {
            format!("∃-Choose on [{member}] with {witness}")
        }
        Move::ExistsChoose {
            member,
            witness,
            path,
        } => format!("∃-Choose on [{member}] at {path:?} with {witness}"),
        Move::Replicate { member } => format!("Replicate [{member}]"),
    }
}

enum Command {
    Quit,
    Undo,
    Go,
    Pick(usize),
    Other(String),
}

fn read_command(
    input: &mut impl BufRead,
    out: &mut impl Write,
    prompt: &str,
) -> io::Result<Command> {
    loop {
        write!(out, "{prompt}> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(Command::Quit);
        }
        let text = line.trim();
        if text.starts_with('#') {
            continue;
        }
        return Ok(match text {
            "quit" | "q" => Command::Quit,
            "undo" | "u" => Command::Undo,
            "" | "ok" | "next" => Command::Go,
            _ => match text.parse::<usize>() {
                Ok(n) => Command::Pick(n),
                Err(_) => Command::Other(text.into()),
            },
        });
    }
}

/// Runs a session reading commands from `input`: a move number, `undo`,
/// `quit`, or an empty line to accept a forced move.
pub fn run_session(
    game: &mut Game,
    role: Role,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> io::Result<Ending> {
    writeln!(out, "goal: {}", print_sequent(game.sequent().members()))?;
    loop {
        show_position(out, game)?;
        match game.turn() {
            Turn::Succ => {
                let proof = game.proof().expect("Succ position has a proof");
                writeln!(out, "Succ: the machine wins.\n")?;
                write!(out, "{}", proof_text(&proof))?;
                match check_proof(&proof, &proof.goal, game.mode()) {
                    Ok(()) => writeln!(out, "checker: accepted")?,
                    Err(e) => writeln!(out, "checker: rejected ({e})")?,
                }
                return Ok(Ending::Proved(proof));
            }
            Turn::Fail(terminal) => {
                writeln!(out, "{}: the environment wins.", terminal.as_str())?;
                let cert = game.certificate();
                match &cert {
                    Some(r) => {
                        writeln!(out, "every move was forced, so this is a refutation:\n")?;
                        write!(out, "{}", certificate_text(r))?;
                        match check_refutation(r, &r.goal, game.mode()) {
                            Ok(()) => writeln!(out, "checker: accepted")?,
                            Err(e) => writeln!(out, "checker: rejected ({e})")?,
                        }
                    }
                    None => writeln!(out, "the machine made choices, so no refutation follows.")?,
                }
                return Ok(Ending::Failed(terminal, cert));
            }
            Turn::Forced(m) => {
                if role == Role::Machine {
                    writeln!(out, "forced: {}", describe(&m))?;
                    game.play(&m, true).expect("forced move is legal");
                    continue;
                }
                writeln!(
                    out,
                    "environment to move: {} (enter to apply)",
                    describe(&m)
                )?;
                match read_command(input, out, "env")? {
                    Command::Quit => return Ok(Ending::Quit),
                    Command::Undo => undo(game, out)?,
                    Command::Go | Command::Pick(0) => {
                        game.play(&m, false).expect("forced move is legal")
                    }
                    _ => writeln!(
                        out,
                        "only the forced move, `undo` or `quit` is possible here"
                    )?,
                }
            }
            Turn::Choice(moves) => {
                if role == Role::Env {
                    match prove(game.sequent(), &game.cfg) {
                        Verdict::Proved(p) => {
                            let Some(ProofStep {
                                inference: Inference::Move(m),
                                ..
                            }) = p.steps.last()
                            else {
                                unreachable!("an unstable position is not a Succ line");
                            };
                            writeln!(out, "machine plays: {}", describe(m))?;
                            game.play(m, true).expect("engine moves are legal");
                        }
                        v => {
                            writeln!(out, "the machine finds no winning move ({}).", v.name())?;
                            return Ok(Ending::Resigned(v));
                        }
                    }
                    continue;
                }
                for (i, m) in moves.iter().enumerate() {
                    writeln!(out, "  {}) {}", i + 1, describe(m))?;
                }
                match read_command(input, out, "machine")? {
                    Command::Quit => return Ok(Ending::Quit),
                    Command::Undo => undo(game, out)?,
                    Command::Pick(n) if (1..=moves.len()).contains(&n) => game
                        .play(&moves[n - 1], false)
                        .expect("listed moves are legal"),
                    Command::Pick(n) => writeln!(out, "no move {n}")?,
                    Command::Go => writeln!(out, "choose a move by number")?,
                    Command::Other(t) => writeln!(out, "unknown command `{t}`")?,
                }
            }
        }
    }
}

fn undo(game: &mut Game, out: &mut impl Write) -> io::Result<()> {
    if !game.undo() {
        writeln!(out, "nothing to undo")?;
    }
    Ok(())
}
