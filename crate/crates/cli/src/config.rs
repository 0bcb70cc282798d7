use std::path::PathBuf;

use clap::ValueEnum;
use monogamy_core::{tolerance, MAX_QUBITS};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Check { file: PathBuf },
    Fuzz,
    ReproducePaper,
    WclassScan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub qubits: usize,
    pub count: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            qubits: 4,
            count: 1,
            seed: 0,
            tolerance: tolerance::INEQUALITY,
            out: None,
            format: Format::Json,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(3..=MAX_QUBITS).contains(&self.qubits) {
            return Err(CliError::Config(format!(
                "qubit count must be in 3..={MAX_QUBITS}, got {}",
                self.qubits
            )));
        }
        if self.count == 0 {
            return Err(CliError::Config("sample count must be at least 1".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        RunConfig::new(Command::Fuzz).validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range_fields() {
        let base = RunConfig::new(Command::Fuzz);
        for config in [
            RunConfig {
                qubits: 2,
                ..base.clone()
            },
            RunConfig {
                qubits: 13,
                ..base.clone()
            },
            RunConfig {
                count: 0,
                ..base.clone()
            },
            RunConfig {
                tolerance: 0.0,
                ..base.clone()
            },
            RunConfig {
                tolerance: f64::NAN,
                ..base.clone()
            },
        ] {
            assert_eq!(config.validate().unwrap_err().code(), "E_CONFIG");
        }
    }
}
