//! `affine-endo`: build affine planes, enumerate their translation groups and
//! check the ring of trace-preserving endomorphisms.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! or input errors.

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use affine_endo::Bounds;
use clap::{Args, Parser, Subcommand};

use crate::report::ReportDocument;

#[derive(Debug, Parser)]
#[command(
    name = "affine-endo",
    version,
    about = "Finite affine planes, translation groups and trace-preserving endomorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct BoundArgs {
    /// Largest plane order (points per line) for dilation enumeration.
    #[arg(long, env = "AFFINE_ENDO_MAX_ORDER", default_value_t = Bounds::DEFAULT_PLANE_ORDER)]
    max_order: usize,
    /// Largest translation-group order for endomorphism enumeration.
    #[arg(long, env = "AFFINE_ENDO_MAX_GROUP", default_value_t = Bounds::DEFAULT_GROUP_ORDER)]
    max_group: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            plane_order: self.max_order,
            group_order: self.max_group,
            ..Bounds::default()
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the incidence document of AG(2, p) for a prime p.
    Build {
        #[arg(long)]
        order: u64,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "AFFINE_ENDO_MAX_ORDER", default_value_t = Bounds::DEFAULT_PLANE_ORDER)]
        max_order: usize,
    },
    /// Check the affine plane axioms.
    Check {
        plane: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate dilations and translations and check the group statements.
    Groups {
        plane: PathBuf,
        #[arg(long)]
        dilations: bool,
        #[arg(long)]
        translations: bool,
        #[arg(long)]
        check_abelian: bool,
        #[arg(long)]
        check_normal: bool,
        #[arg(long)]
        check_directions: bool,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate endomorphisms of the translation group.
    Endo {
        plane: PathBuf,
        #[arg(long)]
        trace_preserving: bool,
        #[arg(long)]
        check_ring: bool,
        /// Include every endomorphism table in the report.
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check in order and emit one consolidated report.
    VerifyAll {
        plane: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, out) = match cli.command {
        Command::Build {
            order,
            out,
            max_order,
        } => return commands::build(order, out.as_deref(), max_order),
        Command::Check { plane, out } => (commands::check(&plane), out),
        Command::Groups {
            plane,
            dilations,
            translations,
            check_abelian,
            check_normal,
            check_directions,
            bounds,
            out,
        } => {
            let flags = commands::GroupFlags {
                dilations,
                translations,
                check_abelian,
                check_normal,
                check_directions,
            };
            (commands::groups(&plane, flags, &bounds.bounds()), out)
        }
        Command::Endo {
            plane,
            trace_preserving,
            check_ring,
            dump,
            bounds,
            out,
        } => {
            let flags = commands::EndoFlags {
                trace_preserving,
                check_ring,
                dump,
            };
            (commands::endo(&plane, flags, &bounds.bounds()), out)
        }
        Command::VerifyAll { plane, bounds, out } => {
            (commands::verify_all(&plane, &bounds.bounds()), out)
        }
    };
    emit(&report, out)
}

fn emit(report: &ReportDocument, out: Option<PathBuf>) -> ExitCode {
    let text = report.to_json();
    let written = match &out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if let Some(message) = &report.error {
        eprintln!("error: {message}");
    }
    eprintln!("{}: {:?}", report.command, report.status);
    ExitCode::from(report.status.exit_code())
}
