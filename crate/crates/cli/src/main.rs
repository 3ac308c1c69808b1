//! `specht`: tableaux, regularisation traces, decomposition matrices,
//! q-characters and verification suites from the command line.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exit status for a verification failure.
pub const EXIT_FAIL: u8 = 1;
/// Exit status for malformed input or arguments.
pub const EXIT_USAGE: u8 = 2;
/// Exit status for `(e, p)` outside the certified range.
pub const EXIT_GATE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "specht", version, about = "Combinatorics of two-column Specht modules")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, env = "SPECHT_JOBS", global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the standard tableaux of a shape with degrees and residues.
    Tableaux(TableauxArgs),
    /// Trace reg_{e,p}, rho_Z and reg' on a two-column path.
    Regularise(RegulariseArgs),
    /// Graded decomposition matrix D^p(q), optionally with the adjustment matrix.
    Decomp(DecompArgs),
    /// q-character of a Specht or simple module.
    Character(CharacterArgs),
    /// Run a verification suite; exit status 0 iff it passes.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    /// Shape, e.g. `2,2,1,1` or `2^4,1^21`.
    #[arg(long)]
    pub shape: String,
    #[arg(long = "e")]
    pub e: usize,
    /// Keep only tableaux with this residue sequence, e.g. `01220101`.
    #[arg(long)]
    pub residues: Option<String>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("path").required(true).args(["word", "runs"]))]
pub struct RegulariseArgs {
    /// Step word over `+`/`-` or column word over `1`/`2`.
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Run notation, e.g. `"+4 - +4 -2 +3 -4 +"`.
    #[arg(long, allow_hyphen_values = true)]
    pub runs: Option<String>,
    #[arg(long = "e")]
    pub e: usize,
    #[arg(long = "p", default_value_t = 0)]
    pub p: usize,
}

#[derive(Debug, Args)]
pub struct DecompArgs {
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long = "e")]
    pub e: usize,
    #[arg(long = "p", default_value_t = 0)]
    pub p: usize,
    /// Also print the adjustment matrix.
    #[arg(long)]
    pub adjustment: bool,
    /// Build the matrix from reg_{e,p} fibres; allowed outside the certified
    /// range, where the output is marked extrapolated.
    #[arg(long)]
    pub combinatorial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharKind {
    Specht,
    Simple,
}

#[derive(Debug, Args)]
pub struct CharacterArgs {
    #[arg(long)]
    pub shape: String,
    #[arg(long = "e")]
    pub e: usize,
    #[arg(long = "p", default_value_t = 0)]
    pub p: usize,
    #[arg(long, value_enum, default_value_t = CharKind::Specht)]
    pub kind: CharKind,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// degrees, bijections, characters, decomp, adjustment, section5,
    /// counterexample or inequality.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// Comma-separated list of e values.
    #[arg(long = "e", value_delimiter = ',')]
    pub e: Vec<usize>,
    /// Comma-separated list of p values.
    #[arg(long = "p", value_delimiter = ',')]
    pub p: Vec<usize>,
}

/// A failed command: message for stderr and the exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<specht_core::Error> for Failure {
    fn from(err: specht_core::Error) -> Self {
        let code = match err {
            specht_core::Error::HypothesisGate { .. } => EXIT_GATE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Output of a successful command and whether it counts as a pass.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("specht: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_FAIL);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(f) => {
            eprintln!("specht: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
