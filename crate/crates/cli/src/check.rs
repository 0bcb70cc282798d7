use std::io::Write;
use std::path::Path;

use monogamy_core::monogamy::report::{evaluate_with, EvalOptions};
use monogamy_core::state_file::parse_state;
use monogamy_core::BoundReport;

use crate::config::Format;
use crate::error::{CliError, ExitStatus};
use crate::output::emit;

pub fn check_file(file: &Path, tolerance: f64) -> Result<BoundReport, CliError> {
    let content = std::fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
    let state = parse_state(&content)?;
    let options = EvalOptions {
        state_id: file
            .file_stem()
            .map_or_else(|| "state".into(), |s| s.to_string_lossy().into_owned()),
        tolerance,
        roles: None,
    };
    Ok(evaluate_with(&state, &options)?)
}

pub fn run(
    file: &Path,
    tolerance: f64,
    out: Option<&Path>,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let report = check_file(file, tolerance)?;
    let document = match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    emit(out, &document, stdout)?;
    let violations: Vec<_> = report.violations().collect();
    if violations.is_empty() {
        return Ok(ExitStatus::Success);
    }
    for entry in violations {
        eprintln!("violation: {} slack {:e}", entry.inequality, entry.slack);
    }
    Ok(ExitStatus::Violation)
}
