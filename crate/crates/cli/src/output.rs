use std::io::Write;
use std::path::Path;

use crate::error::CliError;

/// Writes `content` to `out` when given, otherwise to `stdout`.
pub(crate) fn emit(out: Option<&Path>, content: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| CliError::io(path, e)),
        None => stdout
            .write_all(content.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// 17 significant digits, locale independent; negative zero prints as zero.
pub fn number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}
