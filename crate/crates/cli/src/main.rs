//! `prism-fixer`: domination in permutation prisms from the command line.
//!
//! Every command prints a human summary by default and one JSON-lines
//! record with `--json`. Records look like
//! `{"schema_version":1,"kind":"<kind>","payload":{...}}` with kind one of
//! `gamma`, `analyze`, `adversary`, `fixer`, `probe`, `sweep-summary`.
//! Sets are sorted vertex lists, permutations are image lists, and copy
//! vertices in obstructions are `v + n`.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 no C3-free vertex,
//! 3 bad `--vertex`, 4 guard exceeded, 5 a certificate failed.

mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use prism_fixer::permutation::Permutation;
use prism_fixer::prism::random_adversary_permutation;
use prism_fixer::report::{self, Payload, ProbeReport, ReportRecord};
use prism_fixer::verify::{
    certify, check_graph_with, conjecture_sweep, is_universal_fixer, theorem2_biconditional_probe,
    CheckOutcome, SweepOptions, DEFAULT_CHECK_GUARD, DEFAULT_FIXER_GUARD,
};
use prism_fixer::{Error, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use input::{read_source, GraphInput};

pub const GUARD_ENV: &str = "PRISM_FIXER_GUARD";

#[derive(Parser, Debug)]
#[command(name = "prism-fixer", version, about = "Domination in permutation prisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Domination number and a minimum dominating set.
    Gamma {
        #[command(flatten)]
        input: GraphInput,
        /// List every γ-set.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Girth, C3-free vertices, γ-sets and separable γ-sets.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Also evaluate this permutation (image notation, e.g. "1 3 2 0").
        #[arg(long)]
        pi: Option<Permutation>,
        #[arg(long)]
        json: bool,
    },
    /// Certificate that the adversarial permutation raises γ.
    Adversary {
        #[command(flatten)]
        input: GraphInput,
        /// C3-free vertex to build the permutation around; the smallest by default.
        #[arg(long)]
        vertex: Option<usize>,
        /// Use a random conforming permutation instead of the rotation.
        #[arg(long, requires = "seed")]
        random_derangement: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, env = GUARD_ENV, default_value_t = DEFAULT_CHECK_GUARD)]
        guard: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide universal-fixer status over all n! permutations.
    Fixer {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, env = GUARD_ENV, default_value_t = DEFAULT_FIXER_GUARD)]
        guard: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare γ(πG) = γ(G) with existence of an effective separable γ-set
    /// for every permutation.
    Probe {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, env = GUARD_ENV, default_value_t = DEFAULT_FIXER_GUARD)]
        guard: usize,
        #[arg(long)]
        json: bool,
    },
    /// Fixer verdicts and certificates for every graph6 line of a corpus,
    /// as JSON lines sorted by graph6 with the summary last.
    Sweep {
        /// Corpus file, `-` for stdin.
        corpus: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = GUARD_ENV, default_value_t = DEFAULT_FIXER_GUARD)]
        fixer_guard: usize,
        #[arg(long, env = GUARD_ENV, default_value_t = DEFAULT_CHECK_GUARD)]
        check_guard: usize,
        /// Report elapsed time on stderr.
        #[arg(long)]
        timing: bool,
    },
}

/// An exit status with its message.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotApplicable => 2,
            Error::NotC3Free(_) => 3,
            Error::Guard { .. } => 4,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

fn emit(json: bool, payload: Payload, human: impl FnOnce(&Payload) -> String) -> String {
    if json {
        ReportRecord::new(payload).to_json_line() + "\n"
    } else {
        human(&payload)
    }
}

fn check_vertex(g: &Graph, x: usize) -> Result<(), Failure> {
    match g.is_c3_free_vertex(x) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::NotC3Free(x).into()),
        Err(e) => Err(Failure { code: 3, message: e.to_string() }),
    }
}

fn guard(g: &Graph, limit: usize) -> Result<(), Failure> {
    if g.order() > limit {
        return Err(Error::Guard { n: g.order(), guard: limit }.into());
    }
    Ok(())
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Gamma { input, all, json } => {
            let r = report::gamma_report(&input.load()?, all)?;
            Ok(emit(json, Payload::Gamma(r), |p| match p {
                Payload::Gamma(r) => render::gamma(r),
                _ => unreachable!(),
            }))
        }
        Command::Analyze { input, pi, json } => {
            let r = report::analyze(&input.load()?, pi.as_ref())?;
            Ok(emit(json, Payload::Analyze(r), |p| match p {
                Payload::Analyze(r) => render::analyze(r),
                _ => unreachable!(),
            }))
        }
        Command::Adversary { input, vertex, random_derangement, seed, guard: limit, json } => {
            let g = input.load()?;
            if let Some(x) = vertex {
                check_vertex(&g, x)?;
            }
            let outcome = if random_derangement {
                guard(&g, limit)?;
                let x = vertex.or_else(|| g.c3_free_vertices().first()).ok_or(Error::NotApplicable)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed.expect("clap requires --seed"));
                let pi = random_adversary_permutation(&g, x, &mut rng)?;
                CheckOutcome::Certified(certify(&g, x, pi)?)
            } else {
                check_graph_with(&g, vertex, limit)?
            };
            let cert = outcome.certificate().cloned().ok_or(Error::NotApplicable)?;
            let text = emit(json, Payload::Adversary(outcome), |_| render::certificate(&cert));
            if !cert.passed {
                print!("{text}");
                return Err(Failure { code: 5, message: format!("certificate for {} failed", cert.graph) });
            }
            Ok(text)
        }
        Command::Fixer { input, guard: limit, json } => {
            let v = is_universal_fixer(&input.load()?, limit)?;
            Ok(emit(json, Payload::Fixer(v), |p| match p {
                Payload::Fixer(v) => render::fixer(v),
                _ => unreachable!(),
            }))
        }
        Command::Probe { input, guard: limit, json } => {
            let g = input.load()?;
            let discrepancies = theorem2_biconditional_probe(&g, limit)?;
            let r = ProbeReport {
                graph: prism_fixer::graph::to_graph6(&g)?,
                permutations_tested: (1..=g.order() as u64).product(),
                discrepancies,
            };
            Ok(emit(json, Payload::Probe(r), |p| match p {
                Payload::Probe(r) => render::probe(r),
                _ => unreachable!(),
            }))
        }
        Command::Sweep { corpus, jobs, out, fixer_guard, check_guard, timing } => {
            let text = read_source(&corpus)?;
            let start = Instant::now();
            let opts = SweepOptions { fixer_guard, check_guard, jobs };
            let report = conjecture_sweep(text.lines(), &opts);
            let mut lines = String::new();
            for e in report.entries {
                lines += &ReportRecord::new(Payload::Fixer(e.verdict)).to_json_line();
                lines.push('\n');
                if let Some(c) = e.certificate {
                    lines += &ReportRecord::new(Payload::Adversary(CheckOutcome::Certified(c))).to_json_line();
                    lines.push('\n');
                }
            }
            lines += &ReportRecord::new(Payload::SweepSummary(report.summary)).to_json_line();
            lines.push('\n');
            if timing {
                eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, lines)
                        .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(lines),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
