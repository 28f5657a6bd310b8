mod cache;
mod commands;
mod params;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kerov_core::exact::rational::Rational;
use kerov_core::partitions::Partition;

use crate::cache::Cache;
use crate::commands::{Failure, Outcome};

/// Exit status for malformed invocations (BSD `EX_USAGE`).
const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "kerov", version, about = "Exact Jack characters, free cumulants and Kerov polynomials")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// θ^λ_ρ for all λ, ρ of weight n.
    Theta(Opts),
    /// Moments, Boolean and free cumulants of a diagram.
    Cumulants(Opts),
    /// K_μ in the free cumulants.
    Kerov(Opts),
    /// The connected variant K̃_μ.
    KerovTilde(Opts),
    /// The (i,j) components of K_r (row μ) or of K̃_μ.
    Grade(Opts),
    /// Components rewritten in the Q and C bases.
    Qc(Opts),
    /// Fits of the structure functions named by --claims against the published ones.
    Fit(Opts),
    /// ϑ_μ as a polynomial in content power sums.
    ContentFit(Opts),
    /// Checks named theorems and conjectures.
    Verify(Opts),
    /// K_r for r ≤ rmax and K̃_μ for |μ| ≤ rmax, l(μ) ≥ 2.
    Table(Opts),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    Alpha,
    ZetaEta,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|_| format!("not a rational number: {s:?}"))
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    #[arg(long, value_parser = partition)]
    pub mu: Option<Partition>,
    #[arg(long, value_parser = partition)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub rmax: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub zeta: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub eta: Option<Rational>,
    /// Numeric α; β becomes 1 − α unless --independent-beta.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long)]
    pub independent_beta: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "KEROV_CACHE")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub claims: Option<Vec<String>>,
}

impl Opts {
    pub fn cache(&self) -> Option<Cache> {
        self.cache_dir.as_ref().map(Cache::new)
    }
}

fn dispatch(verb: &Verb) -> Result<Outcome, Failure> {
    match verb {
        Verb::Theta(o) => commands::theta(o),
        Verb::Cumulants(o) => commands::cumulants(o),
        Verb::Kerov(o) => commands::kerov(o, false),
        Verb::KerovTilde(o) => commands::kerov(o, true),
        Verb::Grade(o) => commands::grade(o),
        Verb::Qc(o) => commands::qc(o),
        Verb::Fit(o) => commands::fit(o),
        Verb::ContentFit(o) => commands::content_fit(o),
        Verb::Verify(o) => commands::verify(o),
        Verb::Table(o) => commands::table(o),
    }
}

fn opts(verb: &Verb) -> &Opts {
    match verb {
        Verb::Theta(o)
        | Verb::Cumulants(o)
        | Verb::Kerov(o)
        | Verb::KerovTilde(o)
        | Verb::Grade(o)
        | Verb::Qc(o)
        | Verb::Fit(o)
        | Verb::ContentFit(o)
        | Verb::Verify(o)
        | Verb::Table(o) => o,
    }
}

fn emit(o: &Opts, text: &str) -> std::io::Result<()> {
    match &o.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let o = opts(&cli.verb);
    let (text, code) = match dispatch(&cli.verb) {
        Ok(Outcome { text, verified }) => (text, if verified { 0 } else { EXIT_VERIFICATION }),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    if let Err(e) = emit(o, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_DOMAIN);
    }
    ExitCode::from(code)
}
