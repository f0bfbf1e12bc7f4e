use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "descartes",
    version,
    about = "Sign patterns, root counts and realizability"
)]
pub struct Cli {
    /// Non-realizability database to use instead of the embedded one.
    #[arg(long, global = true, env = "DESCARTES_DB", value_name = "PATH")]
    pub db: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List canonical combinations of a degree and count them.
    Enumerate {
        #[arg(long)]
        degree: usize,
    },
    /// Classify every canonical combination of a degree.
    Classify(ClassifyArgs),
    /// Realize, refute or search for one combination.
    Realize(RealizeArgs),
    /// Check the constructions and search falsification for the σ_k family.
    CertifySeries(CertifyArgs),
    /// Sample the cubic or quartic parameter families on a grid.
    Discriminant {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON-lines witness cache, read before and rewritten after the run.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Write records here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: String,
    #[arg(long)]
    pub pos: usize,
    #[arg(long)]
    pub neg: usize,
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of leading coefficients tried in the derivative check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// x^3 + x^2 + ax + b over an (a, b) window.
    Cubic {
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        a_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        a_max: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1/2")]
        b_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/2")]
        b_max: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// x^4 + x^3 + ax^2 + bx + c at fixed a over a (b, c) window.
    QuarticSlice {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1/2")]
        b_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/2")]
        b_max: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1/2")]
        c_min: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/2")]
        c_max: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Points per axis, endpoints included.
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
