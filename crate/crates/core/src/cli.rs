//! The `spq` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cells::{cells, CellError};
use crate::hmap::h_map;
use crate::involution::SignedInvolution;
use crate::io::parse_sigma;
use crate::verify::{run_suite, Report, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "spq", version, about = "Annihilators and associated varieties for Sp(p,q) via domino tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute H(σ): the domino tableau, its class of signed tableaux and the orbit.
    Hmap {
        #[arg(long)]
        sigma: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// List the parameters of rank n and signature p.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Run the exhaustive checks up to rank n-max.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Harish-Chandra cells of S_{n,p}.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Write the graph in DOT form to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print only the orbit descriptor of H(σ).
    Orbit {
        #[arg(long)]
        sigma: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Tau,
    Wallcross,
    Bijection,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Tau => vec![Suite::Tau],
            SuiteArg::Wallcross => vec![Suite::WallCross],
            SuiteArg::Bijection => vec![Suite::Bijection],
            SuiteArg::All => vec![Suite::Tau, Suite::WallCross, Suite::Bijection],
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            code
        }
    }
}

/// Runs a parsed command; output goes to `out`, diagnostics to `err`.
pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(command, out) {
        Ok(code) => code,
        Err(Failure::BadInput(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BAD_INPUT
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_VERIFY_FAILED
        }
    }
}

enum Failure {
    BadInput(String),
    Verify(String),
}

fn bad(e: impl std::fmt::Display) -> Failure {
    Failure::BadInput(e.to_string())
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::BadInput(format!("write failed: {e}"))
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Hmap { sigma, format } => {
            let s = parse_sigma(sigma).map_err(bad)?;
            let h = h_map(&s).map_err(bad)?;
            match format {
                Format::Json => {
                    let mut v = h.to_json();
                    v["sigma"] = serde_json::Value::String(s.to_string());
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io_err)?;
                }
                Format::Ascii => {
                    writeln!(out, "sigma: {s}").map_err(io_err)?;
                    writeln!(out, "T1:").map_err(io_err)?;
                    write!(out, "{}", h.t1.render_ascii()).map_err(io_err)?;
                    writeln!(out, "T1 json: {}", h.t1.to_json()).map_err(io_err)?;
                    writeln!(out, "class ({} member{}):", h.t2_class.len(), if h.t2_class.len() == 1 { "" } else { "s" })
                        .map_err(io_err)?;
                    for m in h.t2_class.members() {
                        writeln!(out, "  {m}").map_err(io_err)?;
                    }
                    writeln!(out, "orbit: {}", h.descriptor()).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { n, p, count_only } => {
            if p > n {
                return Err(bad(format!("p = {p} exceeds n = {n}")));
            }
            if *count_only {
                writeln!(out, "{}", SignedInvolution::enumerate(*n, *p).count()).map_err(io_err)?;
            } else {
                for s in SignedInvolution::enumerate(*n, *p) {
                    writeln!(out, "{s}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, n_max, format } => {
            let mut reports: Vec<Report> = Vec::new();
            for s in suite.suites() {
                reports.extend(run_suite(s, *n_max));
            }
            match format {
                Format::Json => {
                    let v: Vec<serde_json::Value> = reports.iter().map(Report::to_json).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io_err)?;
                }
                Format::Ascii => {
                    for r in &reports {
                        writeln!(out, "{r}").map_err(io_err)?;
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure::Verify(format!("{failed} of {} reports have failures", reports.len())));
            }
            Ok(EXIT_OK)
        }
        Command::Cells { n, p, dot } => {
            if p > n {
                return Err(bad(format!("p = {p} exceeds n = {n}")));
            }
            let g = cells(*n, *p).map_err(bad)?;
            if let Some(path) = dot {
                std::fs::write(path, g.to_dot()).map_err(|e| bad(format!("{}: {e}", path.display())))?;
            }
            write!(out, "{}", g.summary().map_err(bad)?).map_err(io_err)?;
            match g.verify() {
                Ok(d) => {
                    writeln!(out, "{} cells, {} orbits", g.cells.len(), d.len()).map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                Err(CellError::VerificationFailure { sigma, detail }) => Err(Failure::Verify(format!("{sigma}: {detail}"))),
                Err(e) => Err(bad(e)),
            }
        }
        Command::Orbit { sigma } => {
            let s = parse_sigma(sigma).map_err(bad)?;
            let h = h_map(&s).map_err(bad)?;
            writeln!(out, "{}", h.descriptor()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}
