//! `qvol`: hyperbolic-volume state sums of knot diagrams from the command
//! line.
//!
//! Exit status is 0 on success, 1 for bad input or a failed validation and
//! 2 for numerical failures (a state sum off the volume lattice, or an
//! unparsable number given to `dilog`).

mod commands;
mod inputs;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "qvol",
    version,
    about = "Quandle cocycle invariant from hyperbolic volume"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bloch–Wigner dilogarithm D(re + i·im).
    Dilog {
        #[arg(allow_hyphen_values = true)]
        re: String,
        #[arg(allow_hyphen_values = true)]
        im: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Parse a PD code and describe the diagram.
    Parse {
        #[command(flatten)]
        inputs: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// State sum of the natural coloring (arcs colored by their generators).
    Volume {
        #[command(flatten)]
        inputs: InputArgs,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// State sum of a coloring read from a JSON document.
    Invariant {
        #[command(flatten)]
        inputs: InputArgs,
        /// Coloring document.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Count colorings by the multiple of the volume they reach.
    Enumerate {
        #[command(flatten)]
        inputs: InputArgs,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bounded search for invertibility and amphicheirality witnesses.
    Symmetry {
        #[command(flatten)]
        inputs: InputArgs,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Fixture {
    /// Figure-eight knot, 4-crossing diagram.
    Fig8,
    /// Figure-eight knot, 6-crossing diagram.
    Fig8R2,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// PD code file.
    #[arg(long)]
    pd: Option<PathBuf>,
    /// Holonomy document for the knot.
    #[arg(long)]
    holonomy: Option<PathBuf>,
    /// Holonomy document for the knot with reversed orientation.
    #[arg(long)]
    holonomy_reversed: Option<PathBuf>,
    /// Built-in data; explicit files take precedence.
    #[arg(long, value_enum)]
    fixture: Option<Fixture>,
}

#[derive(Args, Debug, Clone)]
struct NumericArgs {
    /// Base meridian as a word, e.g. "z^-1 y z". Defaults to the first generator.
    #[arg(long, allow_hyphen_values = true)]
    base_meridian: Option<String>,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Maximum conjugator length for the pool of colors.
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// Maximum number of colorings examined per representation.
    #[arg(long, default_value_t = 100_000)]
    cap: usize,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Digits after the decimal point.
    #[arg(long, default_value_t = 12)]
    precision: usize,
}

/// Failure with an exit status and a message for stderr.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<qvol::Error> for Failure {
    fn from(e: qvol::Error) -> Self {
        let message = format!("{}: {e}", e.name());
        if e.is_numeric() {
            Failure::numeric(message)
        } else {
            Failure::input(message)
        }
    }
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
    match commands::run(cli.command) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
