//! Command implementations behind the `monogamy` binary: `check`, `fuzz`,
//! `reproduce-paper` and `wclass-scan`.

pub mod check;
pub mod config;
mod error;
pub mod fuzz;
mod output;
pub mod paper;
pub mod scan;

use std::io::Write;

pub use config::{Command, Format, RunConfig};
pub use error::{CliError, ExitStatus};
pub use output::number;

pub fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<ExitStatus, CliError> {
    config.validate()?;
    let out = config.out.as_deref();
    match &config.command {
        Command::Check { file } => check::run(file, config.tolerance, out, config.format, stdout),
        Command::Fuzz => fuzz::run(
            config.qubits,
            config.count,
            config.seed,
            config.tolerance,
            out,
            config.format,
            stdout,
        ),
        Command::ReproducePaper => paper::run(out, stdout),
        Command::WclassScan => scan::run(config.qubits, config.count, config.seed, config.tolerance, out, stdout),
    }
}
