//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `check` records a failing verdict, 2 on
//! usage, parse, input or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::edgelist::read_edge_list;
use crate::eval::{evaluate_json, ReportJson};
use crate::expr::parse_expression;
use crate::harness::{run_bound_checks, run_formula_checks, Ranges};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest order accepted for the randomized checks.
pub const MAX_SAMPLE_ORDER: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "curling",
    version,
    about = "Curling numbers of graphs and graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a product expression, e.g. "(K3 + K2) o K1" or "C5 box P7".
    Eval {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Combine degree multisets instead of building the product graph.
        #[arg(long)]
        fast: bool,
    },
    /// Report on a graph stored as an edge list.
    File {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replay the closed-form results and run the randomized checks.
    Check {
        /// Inclusive family parameter range.
        #[arg(long, default_value = "2..12")]
        ranges: Ranges,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest order of the random graphs (at most 10).
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit_report(out: &mut dyn Write, report: &ReportJson, json: bool) -> std::io::Result<()> {
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(report).expect("report serializes")
        )
    } else {
        writeln!(out, "{}", report.to_text())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            }
        }
    };

    let result = match cli.command {
        Command::Eval { expr, json, fast } => {
            let parsed = match parse_expression(&expr) {
                Ok(p) => p,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    let _ = writeln!(err, "  {expr}");
                    let _ = writeln!(err, "  {}^", " ".repeat(expr[..e.offset()].chars().count()));
                    return EXIT_USAGE;
                }
            };
            match evaluate_json(&parsed, Path::new("."), fast) {
                Ok(report) => emit_report(out, &report, json),
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        Command::File { path, json } => match read_edge_list(&path) {
            Ok(g) => match curling_core::curling_report(&g) {
                Ok(r) => emit_report(out, &ReportJson::from(&r), json),
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            },
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        Command::Check {
            ranges,
            samples,
            seed,
            max_order,
            json,
        } => {
            if max_order == 0 || max_order > MAX_SAMPLE_ORDER {
                let _ = writeln!(err, "error: --max-order must be in 1..={MAX_SAMPLE_ORDER}");
                return EXIT_USAGE;
            }
            let report =
                run_formula_checks(ranges).merge(run_bound_checks(samples, max_order, seed));
            let written = if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("json")
                )
            } else {
                writeln!(out, "{}", report.to_table())
            };
            if written.is_ok() && report.has_failures() {
                return EXIT_FAIL;
            }
            written
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
