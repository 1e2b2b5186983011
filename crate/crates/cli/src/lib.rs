//! `detquartic` — command-line front end for the determinantal-quartic
//! classification engine.
//!
//! Every subcommand emits a versioned JSON envelope (or its CSV/Markdown
//! tabular view) and uses exit code 0 on success, 1 for domain errors (the
//! error name rides in the envelope) and 2 for usage errors.

pub mod commands;
pub mod envelope;
pub mod error;
pub mod golden;
pub mod parse;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use detquartic::{DivisorClass, GramLattice};

use commands::Output;
use envelope::{Envelope, ErrorInfo};
use error::CliError;

/// Environment variable that overrides the golden-table output directory.
pub const OUT_DIR_ENV: &str = "DETQUARTIC_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    Effective,
    Noneffective,
}

fn divisor_arg(s: &str) -> Result<DivisorClass, String> {
    parse::parse_divisor(s)
}

fn gram_arg(s: &str) -> Result<GramLattice, String> {
    parse::parse_gram(s)
}

#[derive(Debug, Parser)]
#[command(
    name = "detquartic",
    version,
    about = "Exact Picard-lattice arithmetic and the classification of rank-2 initialized \
             indecomposable aCM bundles on general determinantal quartic surfaces"
)]
pub struct Cli {
    /// Output format for the result envelope.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Lattice profile g11,g12,g22 (default 4,6,4). Subcommands that rest on
    /// the effectivity criterion refuse non-default profiles.
    #[arg(long, global = true, value_parser = gram_arg)]
    pub gram: Option<GramLattice>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection number (X1·h + Y1·A)·(X2·h + Y2·A).
    #[command(allow_negative_numbers = true)]
    Intersect { x1: i64, y1: i64, x2: i64, y2: i64 },
    /// Euler characteristic of the line bundle O(Xh + YA).
    #[command(allow_negative_numbers = true)]
    ChiLine { x: i64, y: i64 },
    /// Effectivity, cohomology, parity, curve invariants and aCM data of one class.
    #[command(allow_negative_numbers = true)]
    LineReport { x: i64, y: i64 },
    /// The initialized aCM line-bundle classes.
    AcmLines {
        /// Scan box half-width.
        #[arg(long = "box", default_value_t = 32)]
        scan_box: i64,
    },
    /// Candidate first Chern classes of one branch.
    Candidates {
        #[arg(long, value_enum)]
        branch: Branch,
        /// Scan box half-width.
        #[arg(long = "box", default_value_t = 32)]
        scan_box: i64,
    },
    /// The divisorial-part table with the residual effectivity column.
    TableA,
    /// The full classification, or the verdict for a single candidate.
    Classify {
        /// A divisor class: X,Y or a symbolic form such as 3h-A.
        #[arg(long, value_parser = divisor_arg)]
        c1: Option<DivisorClass>,
    },
    /// Admissibility of a Hilbert function prefix (values from degree 0).
    HilbertCheck {
        #[arg(required = true)]
        values: Vec<u64>,
        /// Scheme degree; defaults to the last value.
        #[arg(long)]
        total: Option<u64>,
    },
    /// Write the four canonical tables (candidate lists, table, theorem).
    Golden {
        /// Output directory; DETQUARTIC_OUT_DIR overrides the default.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Render the effectivity region with the candidate window as SVG.
    RegionSvg {
        #[arg(long)]
        out: PathBuf,
        /// Plot range half-width.
        #[arg(long = "box", default_value_t = 8)]
        scan_box: i64,
    },
    /// Replay the numeric facts of a serialized trace or verdict file.
    Replay {
        #[arg(long)]
        trace: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Intersect { .. } => "intersect",
            Command::ChiLine { .. } => "chi-line",
            Command::LineReport { .. } => "line-report",
            Command::AcmLines { .. } => "acm-lines",
            Command::Candidates { .. } => "candidates",
            Command::TableA => "table-a",
            Command::Classify { .. } => "classify",
            Command::HilbertCheck { .. } => "hilbert-check",
            Command::Golden { .. } => "golden",
            Command::RegionSvg { .. } => "region-svg",
            Command::Replay { .. } => "replay",
        }
    }
}

#[derive(Debug)]
pub struct CommandOutput {
    pub envelope: Envelope,
    pub table: envelope::Table,
}

/// Run one parsed invocation, producing the envelope and its tabular view.
pub fn execute(cli: &Cli) -> Result<CommandOutput, CliError> {
    let lattice = cli.gram.unwrap_or_else(GramLattice::determinantal_quartic);
    let name = cli.command.name();
    let out: Output = match &cli.command {
        Command::Intersect { x1, y1, x2, y2 } => commands::intersect_cmd(
            &lattice,
            DivisorClass::new(*x1, *y1),
            DivisorClass::new(*x2, *y2),
        ),
        Command::ChiLine { x, y } => commands::chi_line_cmd(&lattice, DivisorClass::new(*x, *y)),
        Command::LineReport { x, y } => {
            commands::line_report_cmd(&lattice, DivisorClass::new(*x, *y))?
        }
        Command::AcmLines { scan_box } => commands::acm_lines_cmd(&lattice, *scan_box)?,
        Command::Candidates { branch, scan_box } => {
            commands::candidates_cmd(&lattice, *branch == Branch::Effective, *scan_box)?
        }
        Command::TableA => commands::table_a_cmd(&lattice)?,
        Command::Classify { c1 } => commands::classify_cmd(&lattice, *c1)?,
        Command::HilbertCheck { values, total } => {
            commands::hilbert_check_cmd(values.clone(), *total)?
        }
        Command::Golden { out_dir } => {
            let dir = out_dir
                .clone()
                .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("golden"));
            commands::golden_cmd(&lattice, &dir)?
        }
        Command::RegionSvg { out, scan_box } => commands::region_svg_cmd(&lattice, out, *scan_box)?,
        Command::Replay { trace } => commands::replay_cmd(trace)?,
    };
    let envelope = Envelope::new(name, lattice, out.payload).with_warnings(out.warnings);
    Ok(CommandOutput { envelope, table: out.table })
}

/// Render an error as an envelope so the failure is machine-readable.
pub fn error_envelope(cli: &Cli, err: &CliError) -> Envelope {
    let lattice = cli.gram.unwrap_or_else(GramLattice::determinantal_quartic);
    let mut envelope = Envelope::new(cli.command.name(), lattice, serde_json::Value::Null);
    envelope.error = Some(ErrorInfo { name: err.name(), message: err.to_string() });
    envelope
}

/// Execute and print; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.envelope.to_json()),
                Format::Csv => {
                    print!("{}", out.table.to_csv());
                    for w in &out.envelope.warnings {
                        eprintln!("warning: {w}");
                    }
                }
                Format::Markdown => {
                    print!("{}", out.table.to_markdown());
                    for w in &out.envelope.warnings {
                        eprintln!("> note: {w}");
                    }
                }
            }
            0
        }
        Err(err) => {
            // errors are always emitted as JSON envelopes, whatever the format
            println!("{}", error_envelope(cli, &err).to_json());
            1
        }
    }
}
