use std::fs::File;
use std::io::{self, BufReader, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lkg::bench;
use lkg::corpus;
use lkg::format::{
    certificate_json, certificate_text, proof_json, proof_text, read_artifact, Artifact,
};
use lkg::play::{run_session, Ending, Game, Role};
use lkg::problems::{parse_problem_file, Problem, ProblemError};
use lkg_core::syntax::{read_derived_sequent, read_sequent, ReadError};
use lkg_core::{
    check_proof, check_refutation, prove_with_stats, Mode, SearchConfig, Sequent, Verdict,
};

const EXIT_PROVED: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lkg",
    version,
    about = "Game-semantics sequent prover for first-order logic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prove a sequent, or every line of a problem file.
    Prove {
        /// A sequent such as "p(a), exists x. p(x)", or a path to a problem file.
        input: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = ProofFormat::Text)]
        proof_format: ProofFormat,
    },
    /// Check a proof or refutation certificate in JSON form.
    Check {
        file: PathBuf,
        /// Goal the artifact must prove or refute; defaults to its own goal.
        goal: Option<String>,
        /// Rule table to check against; defaults to the artifact's mode.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Play the proof game interactively.
    Play {
        input: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = RoleArg::Machine)]
        role: RoleArg,
        /// Read commands from a file instead of the terminal.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Save the finished proof or certificate as JSON.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Run every problem in a file and report verdicts and timings.
    Bench {
        /// Problem file; omit with --bundled.
        file: Option<PathBuf>,
        /// Run the bundled valid and invalid corpus.
        #[arg(long, conflicts_with = "file")]
        bundled: bool,
        /// Run both modes and compare.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args, Clone)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Lkgp)]
    mode: ModeArg,
    #[arg(long, default_value_t = 2)]
    max_term_depth: usize,
    #[arg(long, default_value_t = 1)]
    max_replicates: usize,
    #[arg(long, default_value_t = 10_000)]
    max_steps: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            mode: self.mode.into(),
            max_term_depth: self.max_term_depth,
            max_replicates: self.max_replicates,
            max_steps: self.max_steps,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Lkg,
    Lkgp,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Lkg => Mode::Lkg,
            ModeArg::Lkgp => Mode::LkgPrime,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ProofFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum RoleArg {
    Machine,
    Env,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Prove {
            input,
            search,
            proof_format,
        } => cmd_prove(&input, &search.config(), proof_format),
        Command::Check { file, goal, mode } => {
            cmd_check(&file, goal.as_deref(), mode.map(Mode::from))
        }
        Command::Play {
            input,
            search,
            role,
            script,
            transcript,
        } => {
            let role = match role {
                RoleArg::Machine => Role::Machine,
                RoleArg::Env => Role::Env,
            };
            cmd_play(
                &input,
                &search.config(),
                role,
                script.as_deref(),
                transcript.as_deref(),
            )
        }
        Command::Bench {
            file,
            bundled,
            compare,
            search,
        } => cmd_bench(file.as_deref(), bundled, compare, &search.config()),
    };
    ExitCode::from(code)
}

/// Prints a read error with a caret line under the offending span.
fn report_read_error(source: &str, e: &ReadError) {
    eprintln!("error: {e}");
    if let ReadError::Parse(p) = e {
        let start = source[..p.span.start.min(source.len())].chars().count();
        let width = source
            .get(p.span.start..p.span.end)
            .map_or(1, |s| s.chars().count().max(1));
        eprintln!("  {source}");
        eprintln!("  {}{}", " ".repeat(start), "^".repeat(width));
    }
}

fn read_goal(text: &str) -> Result<Sequent, ReadError> {
    Ok(Sequent::new(read_sequent(text)?).expect("parser rejects empty sequents"))
}

fn render_verdict(v: &Verdict, steps: usize, mode: Mode, format: ProofFormat) -> String {
    match (v, format) {
        (Verdict::Proved(p), ProofFormat::Text) => format!("Proved\n{}", proof_text(p)),
        (Verdict::Refuted(r), ProofFormat::Text) => {
            format!("Refuted ({})\n{}", r.terminal.as_str(), certificate_text(r))
        }
        (Verdict::Unknown { reason, .. }, ProofFormat::Text) => {
            format!("Unknown ({reason}) after {steps} steps\n")
        }
        (Verdict::Proved(p), ProofFormat::Json) => json_line(&proof_json(p, mode)),
        (Verdict::Refuted(r), ProofFormat::Json) => json_line(&certificate_json(r, mode)),
        (Verdict::Unknown { reason, .. }, ProofFormat::Json) => json_line(
            &serde_json::json!({ "verdict": "Unknown", "reason": reason.as_str(), "steps": steps }),
        ),
    }
}

fn json_line(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifacts serialize");
    s.push('\n');
    s
}

fn exit_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Proved(_) => EXIT_PROVED,
        Verdict::Refuted(_) => EXIT_REFUTED,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

/// A single sequent prints its verdict and maps it to the exit status. A
/// problem file prints one verdict per line and exits with the highest
/// status seen.
fn cmd_prove(input: &str, cfg: &SearchConfig, format: ProofFormat) -> u8 {
    let path = Path::new(input);
    if !path.is_file() {
        return match read_goal(input) {
            Ok(goal) => {
                let (v, stats) = prove_with_stats(&goal, cfg, &|| false);
                print!("{}", render_verdict(&v, stats.steps, cfg.mode, format));
                exit_code(&v)
            }
            Err(e) => {
                report_read_error(input, &e);
                EXIT_INPUT
            }
        };
    }
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {input}: {e}");
            return EXIT_INPUT;
        }
    };
    let mut worst = EXIT_PROVED;
    for problem in parse_problem_file(&text) {
        let code = match &problem.goal {
            Ok(goal) => {
                let (v, stats) = prove_with_stats(goal, cfg, &|| false);
                print!(
                    "{}: {}",
                    problem.label,
                    render_verdict(&v, stats.steps, cfg.mode, format)
                );
                exit_code(&v)
            }
            Err(e) => {
                report_problem_error(&problem, e);
                EXIT_INPUT
            }
        };
        worst = worst.max(code);
    }
    worst
}

fn report_problem_error(problem: &Problem, e: &ProblemError) {
    eprint!("line {} ({}): ", problem.line, problem.label);
    match e {
        ProblemError::Read(r) => report_read_error(&problem.source, r),
        other => eprintln!("error: {other}"),
    }
}

fn cmd_check(file: &Path, goal: Option<&str>, mode: Option<Mode>) -> u8 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return EXIT_INPUT;
        }
    };
    let artifact = match read_artifact(&text) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let goal = match goal {
        None => artifact.goal().clone(),
        Some(g) => match read_derived_sequent(g) {
            Ok(members) => Sequent::new(members).expect("parser rejects empty sequents"),
            Err(e) => {
                report_read_error(g, &e);
                return EXIT_INPUT;
            }
        },
    };
    let mode = mode.unwrap_or(artifact.mode());
    let result = match &artifact {
        Artifact::Proof(p, _) => check_proof(p, &goal, mode),
        Artifact::Refutation(r, _) => check_refutation(r, &goal, mode),
    };
    match result {
        Ok(()) => {
            println!("accepted");
            0
        }
        Err(e) => {
            println!("rejected: {e}");
            1
        }
    }
}

fn cmd_play(
    input: &str,
    cfg: &SearchConfig,
    role: Role,
    script: Option<&Path>,
    transcript: Option<&Path>,
) -> u8 {
    let goal = match read_goal(input) {
        Ok(g) => g,
        Err(e) => {
            report_read_error(input, &e);
            return EXIT_INPUT;
        }
    };
    let mut game = Game::new(goal, cfg.clone());
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let ending = match script {
        Some(path) => match File::open(path) {
            Ok(f) => run_session(&mut game, role, &mut BufReader::new(f), &mut out),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        None => {
            if !io::stdin().is_terminal() {
                eprintln!(
                    "error: play needs an interactive terminal; use --script FILE to supply moves"
                );
                return EXIT_INPUT;
            }
            run_session(&mut game, role, &mut io::stdin().lock(), &mut out)
        }
    };
    let ending = match ending {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let _ = out.flush();
    let (artifact, code) = match &ending {
        Ending::Proved(p) => (Some(json_line(&proof_json(p, cfg.mode))), EXIT_PROVED),
        Ending::Failed(_, Some(r)) => (
            Some(json_line(&certificate_json(r, cfg.mode))),
            EXIT_REFUTED,
        ),
        Ending::Failed(_, None) | Ending::Resigned(_) | Ending::Quit => (None, EXIT_UNKNOWN),
    };
    if let (Some(path), Some(json)) = (transcript, artifact) {
        if let Err(e) = std::fs::write(path, json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
        println!("transcript saved to {}", path.display());
    }
    code
}

fn cmd_bench(file: Option<&Path>, bundled: bool, compare: bool, cfg: &SearchConfig) -> u8 {
    let text = if bundled {
        format!("{}\n{}", corpus::VALID, corpus::INVALID)
    } else {
        let Some(path) = file else {
            eprintln!("error: give a problem file or --bundled");
            return EXIT_INPUT;
        };
        match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
    };
    let problems = parse_problem_file(&text);
    if compare {
        let lkg = bench::run(
            &problems,
            &SearchConfig {
                mode: Mode::Lkg,
                ..cfg.clone()
            },
        );
        let lkgp = bench::run(
            &problems,
            &SearchConfig {
                mode: Mode::LkgPrime,
                ..cfg.clone()
            },
        );
        print!("{}", bench::render_comparison(&lkg, &lkgp));
    } else {
        print!("{}", bench::render(&bench::run(&problems, cfg), cfg.mode));
    }
    0
}
