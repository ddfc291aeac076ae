//! `leja`: generate disk Leja points, compute Lebesgue constants, and run the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 on a failed verification or runtime error,
//! 2 on a usage error.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "leja", version, about = "Leja points on the unit disk and their Lebesgue constants")]
pub struct Cli {
    /// Run every data-parallel loop on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Lambda,
    Lambda2,
    Both,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} is not a positive number"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first k points of the explicit disk Leja sequence.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the Lebesgue constant and/or quadratic Lebesgue constant of a section.
    Lebesgue {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 1 << 17, value_parser = clap::value_parser!(u64).range(16..))]
        grid: u64,
        #[arg(long, default_value_t = 1e-12, value_parser = positive_f64)]
        refine: f64,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites; exits with 1 if any check fails.
    Verify {
        /// Largest k for every suite (defaults: 1024 for numerical suites, 65536 for exact ones).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: Option<u64>,
        #[arg(long, default_value_t = 1 << 17, value_parser = clap::value_parser!(u64).range(16..))]
        grid: u64,
        /// Scale the grid with k (64 samples per unit of the next power of two), capped at --grid.
        #[arg(long)]
        adaptive_grid: bool,
        #[arg(long, default_value_t = 1e-12, value_parser = positive_f64)]
        refine: f64,
        /// Comma-separated subset of: bounds, sandwich, recursion, lemma3, symmetry, greedy, halving.
        #[arg(long, default_value = "bounds,sandwich,recursion,lemma3,symmetry,greedy,halving")]
        suites: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample a Lebesgue function on a uniform grid of the unit circle.
    Plotdata {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(16..))]
        grid: u64,
        #[arg(long, value_enum, default_value_t = Which::Lambda)]
        which: Which,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build a greedy Leja section on a discretized unit circle, seeded at 1.
    Greedy {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Number of equispaced candidate points on the circle.
        #[arg(long, default_value_t = 8192, value_parser = clap::value_parser!(u64).range(2..))]
        grid: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate the exact majorant sequence U_k and defect delta_k.
    Recursion {
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
