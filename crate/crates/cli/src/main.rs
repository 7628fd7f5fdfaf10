//! `koenig`: analyze edge-list graphs, cross-check the characterizations on
//! seeded corpora, and generate graphs and fixture files.
//!
//! Exit codes: 0 ok, 1 check violation, 2 bad input (parse error, invalid
//! parameters, unmet preconditions), 3 size cap exceeded.

mod generate;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use koenig::io::{read_edge_list, write_edge_list};
use koenig::{full_report, AnalysisReport, Error, Limits};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "koenig",
    version,
    about = "König-Egerváry and α⁺-stability analysis of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze edge-list files; one JSON report per line.
    Analyze {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Largest order for the exhaustive enumerations.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every applicable check on seeded random graphs and tabulate.
    Verify(verify::VerifyArgs),
    /// Write a generated graph (or several) as edge lists.
    Generate(generate::GenerateArgs),
    /// Write every fixture graph to `<out>/<name>.gr`.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
        /// Only print the fixture names.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Failure {
        Failure::new(2, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Violation { .. } => 1,
            Error::CapExceeded { .. } | Error::BudgetExceeded(_) => 3,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

pub fn limits(cap: Option<usize>) -> Result<Limits, Failure> {
    match cap {
        None => Ok(Limits::default()),
        Some(cap) => Ok(Limits::with_omega_cap(cap)?),
    }
}

/// Writes to `--out` when given, else to standard output.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::input(e.to_string()))
        }
    }
}

#[derive(Serialize)]
struct SourcedReport<'a> {
    source: String,
    #[serde(flatten)]
    report: &'a AnalysisReport,
}

fn text_summary(source: &str, r: &AnalysisReport) -> String {
    format!(
        "{source}: n={} m={} alpha={} mu={} ke={} pm={} class={:?} core={} anticore={} blossom_free={}\n",
        r.n,
        r.m,
        r.alpha,
        r.mu,
        r.is_ke,
        r.has_pm,
        r.stability.class,
        r.core_report.core,
        r.core_report.anticore,
        r.blossom_free
    )
}

fn analyze(paths: &[PathBuf], cap: Option<usize>, out: Option<&Path>, format: Format) -> Result<(), Failure> {
    let limits = limits(cap)?;
    let mut text = String::new();
    let mut first_failure = None;
    for path in paths {
        let source = path.display().to_string();
        let result = read_edge_list(path).and_then(|g| full_report(&g, &limits));
        match result {
            Ok(report) => match format {
                Format::Json => {
                    let doc = SourcedReport {
                        source,
                        report: &report,
                    };
                    text.push_str(&serde_json::to_string(&doc).expect("reports serialize"));
                    text.push('\n');
                }
                Format::Text => text.push_str(&text_summary(&source, &report)),
            },
            Err(e) => {
                let failure = Failure::from(e);
                eprintln!("{source}: {}", failure.message);
                first_failure.get_or_insert(failure.code);
            }
        }
    }
    emit(out, &text)?;
    match first_failure {
        None => Ok(()),
        Some(code) => Err(Failure::new(code, "")),
    }
}

fn write_fixtures(out: &Path, list: bool) -> Result<(), Failure> {
    let all = koenig::fixtures::fixtures();
    if list {
        let names: String = all.iter().map(|f| format!("{}\n", f.name)).collect();
        return emit(None, &names);
    }
    fs::create_dir_all(out).map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    for f in &all {
        let path = out.join(format!("{}.gr", f.name));
        emit(Some(&path), &write_edge_list(&f.graph))?;
    }
    eprintln!("wrote {} fixtures to {}", all.len(), out.display());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            paths,
            cap,
            out,
            format,
        } => analyze(&paths, cap, out.as_deref(), format),
        Command::Verify(args) => verify::run(&args),
        Command::Generate(args) => generate::run(&args),
        Command::Fixtures { out, list } => write_fixtures(&out, list),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
