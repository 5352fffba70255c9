//! Command-line front end for the graph-energy toolkit: a composable graph
//! expression syntax plus subcommands for spectra, energy classification,
//! pair certification, claim verification and exhaustive enumeration.

pub mod commands;
pub mod expr;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Outcome, VerifyArgs};

#[derive(Parser, Debug)]
#[command(
    name = "gel",
    about = "Graph energy lab: spectra, energy classification and claim verification",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutFormat {
    G6,
    Edgelist,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from an expression and print it
    Build {
        expr: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutFormat::G6)]
        out: OutFormat,
    },
    /// Print the adjacency spectrum (grouped by multiplicity)
    Spectrum {
        expr: String,
        /// Require and print the exact integer spectrum
        #[arg(long)]
        exact: bool,
    },
    /// Print the graph energy
    Energy { expr: String },
    /// Energy classification report
    Classify {
        expr: String,
        /// One-line CSV row instead of the full report
        #[arg(long)]
        csv: bool,
    },
    /// Certify an (equi)energetic pair
    Pair { expr1: String, expr2: String },
    /// Run the verifier for a cataloged claim (see README for ids)
    Verify {
        id: String,
        /// Seed graph expression
        #[arg(long)]
        seed: Option<String>,
        /// Second operand for binary claims
        #[arg(long)]
        seed2: Option<String>,
        /// Multiplicity range, e.g. 1..5
        #[arg(long)]
        m: Option<String>,
        /// Join-size range, e.g. 1..40
        #[arg(long)]
        n: Option<String>,
        /// Order range, e.g. 2..10
        #[arg(long)]
        p: Option<String>,
    },
    /// Exhaustively scan all labeled graphs on n vertices
    Enumerate {
        /// Number of vertices (at most 7)
        #[arg(long)]
        n: usize,
        /// orderenergetic | hypoenergetic | equienergetic
        #[arg(long)]
        flag: String,
    },
}

/// Execute a parsed invocation; the caller prints the output and exits with
/// the code.
pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build { expr, out } => commands::build(
            expr,
            match out {
                OutFormat::G6 => "g6",
                OutFormat::Edgelist => "edgelist",
            },
            cli.json,
        ),
        Command::Spectrum { expr, exact } => commands::spectrum_cmd(expr, *exact, cli.json),
        Command::Energy { expr } => commands::energy_cmd(expr, cli.json),
        Command::Classify { expr, csv } => commands::classify_cmd(expr, *csv, cli.json),
        Command::Pair { expr1, expr2 } => commands::pair_cmd(expr1, expr2, cli.json),
        Command::Verify {
            id,
            seed,
            seed2,
            m,
            n,
            p,
        } => commands::verify_cmd(
            &VerifyArgs {
                id,
                seed: seed.as_deref(),
                seed2: seed2.as_deref(),
                m: m.as_deref(),
                n: n.as_deref(),
                p: p.as_deref(),
            },
            cli.json,
        ),
        Command::Enumerate { n, flag } => commands::enumerate_cmd(*n, flag, cli.json),
    }
}

/// Convenience for tests: run from raw argv strings.
pub fn run_from<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            output: e.to_string(),
            code: commands::EXIT_USAGE,
        },
    }
}
