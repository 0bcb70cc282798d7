use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use monogamy_cli::{Command, ExitStatus, Format, RunConfig};
use monogamy_core::tolerance;

/// Check concurrence monogamy bounds on N-qubit pure states.
#[derive(Parser)]
#[command(name = "monogamy", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Evaluate every applicable bound for a state file.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = tolerance::INEQUALITY)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate the bounds on seeded Haar-random states and summarize the slack.
    Fuzz {
        #[arg(long)]
        qubits: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = tolerance::INEQUALITY)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recompute every worked example and compare against the expected values.
    ReproducePaper {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the two-sided W-class bound for every pair of sampled states.
    WclassScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = tolerance::INEQUALITY)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl From<Sub> for RunConfig {
    fn from(sub: Sub) -> Self {
        match sub {
            Sub::Check {
                file,
                tolerance,
                out,
                format,
            } => RunConfig {
                tolerance,
                out,
                format,
                ..RunConfig::new(Command::Check { file })
            },
            Sub::Fuzz {
                qubits,
                count,
                seed,
                tolerance,
                out,
                format,
            } => RunConfig {
                command: Command::Fuzz,
                qubits,
                count,
                seed,
                tolerance,
                out,
                format,
            },
            Sub::ReproducePaper { out } => RunConfig {
                out,
                ..RunConfig::new(Command::ReproducePaper)
            },
            Sub::WclassScan {
                n,
                count,
                seed,
                tolerance,
                out,
            } => RunConfig {
                qubits: n,
                count,
                seed,
                tolerance,
                out,
                format: Format::Csv,
                ..RunConfig::new(Command::WclassScan)
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports usage errors with code 2, which is reserved for violations here.
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let config = RunConfig::from(cli.command);
    let status = match monogamy_cli::run(&config, &mut std::io::stdout().lock()) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitStatus::InputError
        }
    };
    ExitCode::from(status.code() as u8)
}
