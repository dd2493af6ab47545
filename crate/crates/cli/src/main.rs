//! `hom-embed`: check, derive and compute with 3-Hom-Lie algebras and
//! embedding tensors stored in a JSON workspace.

mod commands;
mod error;
mod json;
mod report;
mod workspace;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Construction, DeformArgs, ExampleSpec, Options};
use error::CliError;
use report::Report;
use workspace::Workspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "hom-embed", version, about = "Exact computations for 3-Hom-Lie algebras and embedding tensors")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest coefficient space (in scalars) a cohomology computation may build.
    #[arg(long, default_value_t = 20000, global = true)]
    capacity: usize,

    /// Also evaluate the printed variant of the Hom-Leibniz identity.
    #[arg(long, global = true)]
    strict_printed_identities: bool,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of a named object.
    Check { path: PathBuf, object: String },
    /// Dimensions of cochains, cocycles, coboundaries and cohomology.
    Cohomology {
        path: PathBuf,
        tensor: String,
        /// Degrees to compute (default 1).
        degrees: Vec<usize>,
    },
    /// Validate a linear deformation and compare it with another.
    Deform {
        path: PathBuf,
        deformation: String,
        /// Second deformation of the same tensor.
        #[arg(long = "same-class", value_name = "DEFORMATION")]
        same_class: Option<String>,
        /// Witness to check against the pair.
        #[arg(long, value_name = "WITNESS")]
        witness: Option<String>,
        /// Search witnesses with integer coordinates up to BOUND in absolute value.
        #[arg(long = "search-witness", value_name = "BOUND", num_args = 0..=1, default_missing_value = "2")]
        search_witness: Option<u32>,
    },
    /// Build a new object and write the workspace back.
    Derive {
        path: PathBuf,
        /// Write to this file instead of updating PATH in place.
        #[arg(long, global = true)]
        output: Option<PathBuf>,
        /// Name of the new object.
        #[arg(long, global = true)]
        name: Option<String>,
        #[command(subcommand)]
        construction: DeriveCmd,
    },
}

#[derive(Debug, Subcommand)]
enum DeriveCmd {
    /// Adjoint representation of an algebra.
    Adjoint { algebra: String },
    /// Direct sum of N copies of the adjoint representation.
    DirectSum { algebra: String, copies: usize },
    /// Hemisemidirect product of a representation.
    Hemisemidirect { representation: String },
    /// The 3-Hom-Leibniz algebra induced by a tensor.
    InducedLeibniz { tensor: String },
    /// The representation induced by a tensor, with its algebra.
    InducedRep { tensor: String },
    /// The Hom-Leibniz algebra of fundamental objects.
    Fundamental { algebra: String },
    /// One of the standard embedding tensors.
    ExampleTensor {
        algebra: String,
        #[command(subcommand)]
        kind: ExampleCmd,
    },
}

#[derive(Debug, Subcommand)]
enum ExampleCmd {
    /// T = Id on the adjoint representation.
    Identity,
    /// A square-zero derivation given by a named matrix.
    Derivation { matrix: String },
    /// Summation map on N copies.
    Sum { copies: usize },
    /// Projection onto summand INDEX (1-based) of N copies.
    Projection { copies: usize, index: usize },
    /// A custom map given by a named matrix.
    CustomF { matrix: String },
}

fn construction(cmd: DeriveCmd) -> Construction {
    match cmd {
        DeriveCmd::Adjoint { algebra } => Construction::Adjoint { algebra },
        DeriveCmd::DirectSum { algebra, copies } => Construction::DirectSum { algebra, copies },
        DeriveCmd::Hemisemidirect { representation } => Construction::Hemisemidirect { representation },
        DeriveCmd::InducedLeibniz { tensor } => Construction::InducedLeibniz { tensor },
        DeriveCmd::InducedRep { tensor } => Construction::InducedRep { tensor },
        DeriveCmd::Fundamental { algebra } => Construction::Fundamental { algebra },
        DeriveCmd::ExampleTensor { algebra, kind } => Construction::ExampleTensor {
            algebra,
            kind: match kind {
                ExampleCmd::Identity => ExampleSpec::Identity,
                ExampleCmd::Derivation { matrix } => ExampleSpec::Derivation(matrix),
                ExampleCmd::Sum { copies } => ExampleSpec::Sum(copies),
                ExampleCmd::Projection { copies, index } => ExampleSpec::Projection(copies, index),
                ExampleCmd::CustomF { matrix } => ExampleSpec::CustomF(matrix),
            },
        },
    }
}

fn run(cli: Cli, report: &mut Report) -> Result<(), CliError> {
    let opts = Options {
        capacity: cli.capacity,
        strict_printed: cli.strict_printed_identities,
    };
    match cli.command {
        Command::Check { path, object } => {
            report.input("path", path.display().to_string());
            report.input("object", object.clone());
            let ws = Workspace::load(&path)?;
            commands::check(&ws, &object, &opts, report)
        }
        Command::Cohomology { path, tensor, degrees } => {
            let degrees = if degrees.is_empty() { vec![1] } else { degrees };
            report.input("path", path.display().to_string());
            report.input("tensor", tensor.clone());
            let list: Vec<String> = degrees.iter().map(usize::to_string).collect();
            report.input("degrees", list.join(","));
            let ws = Workspace::load(&path)?;
            commands::cohomology_cmd(&ws, &tensor, &degrees, &opts, report)
        }
        Command::Deform {
            path,
            deformation,
            same_class,
            witness,
            search_witness,
        } => {
            report.input("path", path.display().to_string());
            report.input("deformation", deformation.clone());
            if let Some(s) = &same_class {
                report.input("same_class", s.clone());
            }
            if let Some(w) = &witness {
                report.input("witness", w.clone());
            }
            if let Some(b) = search_witness {
                report.input("search_bound", b.to_string());
            }
            let ws = Workspace::load(&path)?;
            let args = DeformArgs {
                deformation: &deformation,
                same_class: same_class.as_deref(),
                witness: witness.as_deref(),
                search: search_witness,
            };
            commands::deform(&ws, &args, report)
        }
        Command::Derive {
            path,
            output,
            name,
            construction: cmd,
        } => {
            report.input("path", path.display().to_string());
            let target = commands::output_path(&path, output.as_ref());
            report.input("output", target.display().to_string());
            let mut ws = Workspace::load(&path)?;
            commands::derive(&mut ws, &construction(cmd), name.as_deref(), report)?;
            ws.save(&target)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Cohomology { .. } => "cohomology",
        Command::Deform { .. } => "deform",
        Command::Derive { .. } => "derive",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let timing = cli.timing;
    let mut report = Report::new(command_name(&cli.command));
    let start = Instant::now();
    if let Err(e) = run(cli, &mut report) {
        if format == Format::Text {
            eprintln!("error: {e}");
        }
        report.fail_with(&e);
    }
    if timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Machine => print!("{}", report.to_machine()),
    }
    ExitCode::from(report.exit_code() as u8)
}
