//! `lobell`: volume tables, convergence studies, bound reports, polyhedron
//! linting and coloring certificates for Löbell polyhedra and towers.
//!
//! Exit status: 0 ok, 1 usage or input error, 2 a bound or check is
//! violated, 3 a coloring search ran out of budget.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "lobell",
    version,
    about = "Löbell polyhedra: volumes, bounds and colorings"
)]
pub struct Cli {
    /// Output format: aligned table or CSV
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,

    /// Absolute error target for Lobachevsky function evaluations
    #[arg(
        long,
        default_value_t = 1e-13,
        global = true,
        allow_negative_numbers = true
    )]
    pub precision: f64,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volumes of R(n) for a range of n, with the asymptotic band
    Volumes { n_from: u64, n_to: u64 },
    /// Counts and volumes of towers R_k(n)
    Tower {
        k: u64,
        n_from: u64,
        /// Last n (defaults to N_FROM)
        n_to: Option<u64>,
    },
    /// Ratios vol/vert of R_k(n) against their convergence bands
    Convergence {
        /// Comma-separated tower heights
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Lower and upper volume bounds from V, F, S or a polyhedron file
    Bounds(BoundsArgs),
    /// Check a polyhedron file against the right-angled polyhedron invariants
    Validate { file: PathBuf },
    /// Find and certify a four-coloring of the faces
    Color(ColorArgs),
    /// The constants behind every bound coefficient
    Constants,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("input").required(true).multiple(false)))]
pub struct BoundsArgs {
    /// Vertex count V
    #[arg(long, group = "input")]
    pub vertices: Option<u64>,
    /// Face count F
    #[arg(long, group = "input")]
    pub faces: Option<u64>,
    /// Lateral surface area S
    #[arg(long, group = "input")]
    pub area: Option<f64>,
    /// Polyhedron in .poly format
    #[arg(long, group = "input")]
    pub file: Option<PathBuf>,
    /// Volume to test against the bounds
    #[arg(long)]
    pub volume: Option<f64>,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("target").required(true).multiple(false)))]
pub struct ColorArgs {
    /// Color R(n)
    #[arg(long, value_name = "N", group = "target")]
    pub lobell: Option<u64>,
    /// Color R_k(n), given as K,N
    #[arg(long, value_name = "K,N", value_delimiter = ',', group = "target")]
    pub tower: Option<Vec<u64>>,
    /// Polyhedron in .poly format
    #[arg(long, group = "target")]
    pub file: Option<PathBuf>,
    /// Search budget in nodes
    #[arg(long, default_value_t = lobell::polyhedra::DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(commands::run(&cli) as u8)
}
