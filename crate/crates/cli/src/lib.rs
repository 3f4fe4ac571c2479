//! Verification runs over the `newton-strata` library.
//!
//! Every subcommand builds a JSON report; the text and CSV forms are
//! rendered from that JSON. Exit codes: `0` all checks passed, `1` a
//! mathematical check failed, `2` invalid input.

pub mod commands;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use newton_strata::springer::{DEFAULT_DENOM_BOUND, DEFAULT_SAMPLES};
use newton_strata::weyl::DEFAULT_CAP;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
    /// Only for `table`.
    Csv,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "strata", version, about = "Exact checks for alcoves, Springer twists and Newton strata")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest Weyl group that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long = "denom-bound", global = true, default_value_t = DEFAULT_DENOM_BOUND)]
    pub denom_bound: i64,
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// ψ on every coset of P(R∨)/Q(R∨).
    Psi {
        #[arg(long = "type")]
        kind: String,
    },
    /// Fundamental alcove, barycenter and the automorphisms (ψ(μ), μ).
    Alcove {
        #[arg(long = "type")]
        kind: String,
    },
    /// Twisted fixed sets, regular twist classes and eigenvalues.
    Springer {
        #[arg(long = "type")]
        kind: String,
        /// Node label j of ω̄_j (1-based, 0 for the trivial class).
        #[arg(long)]
        x: Option<usize>,
    },
    /// Levi subgroup, μ class and twist w(ν) of a Newton point.
    Newton {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// Puiseux witness for a Newton stratum.
    Witness {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// Per-type summary over every supported type up to a rank.
    Table {
        #[arg(long = "max-rank", default_value_t = 4)]
        max_rank: usize,
    },
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: Format::Json,
            out: None,
            seed: 0,
            cap: DEFAULT_CAP,
            denom_bound: DEFAULT_DENOM_BOUND,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Result of a run: the exit code, the JSON report (absent on invalid
/// input) and its rendering in the requested format.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub code: i32,
    pub report: Option<Value>,
    pub rendered: String,
}

pub fn run(config: &RunConfig) -> RunOutcome {
    match commands::dispatch(config).and_then(|report| {
        let rendered = render::render(&report, config.format).map_err(CliError::input)?;
        Ok((report, rendered))
    }) {
        Ok((report, rendered)) => {
            let pass = report.get("pass").and_then(Value::as_bool).unwrap_or(false);
            RunOutcome {
                code: if pass { EXIT_PASS } else { EXIT_FAIL },
                report: Some(report),
                rendered,
            }
        }
        Err(e) => RunOutcome {
            code: EXIT_INPUT,
            report: None,
            rendered: format!("error: {e}\n"),
        },
    }
}
