//! Seeded Haar-random sweeps over every applicable bound.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use monogamy_core::monogamy::report::{evaluate_with, EvalOptions};
use monogamy_core::state::derive_seed;
use monogamy_core::state_file::serialize_state;
use monogamy_core::{BoundReport, PureState};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Format;
use crate::error::{CliError, ExitStatus};
use crate::output::{emit, number};

const CHUNK: usize = 1024;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityStats {
    pub inequality: String,
    pub evaluated: usize,
    pub min_slack: f64,
    pub worst_sample: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub qubits: usize,
    pub count: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub inequalities: Vec<InequalityStats>,
    pub violations: usize,
    pub violating_samples: Vec<usize>,
}

impl FuzzSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("inequality,evaluated,min_slack,worst_sample,violations\n");
        for s in &self.inequalities {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                s.inequality,
                s.evaluated,
                number(s.min_slack),
                s.worst_sample,
                s.violations
            );
        }
        out
    }
}

/// The state used for iteration `sample` of a run seeded with `seed`.
pub fn sample_state(qubits: usize, seed: u64, sample: usize) -> Result<PureState, CliError> {
    Ok(PureState::random_haar(qubits, derive_seed(seed, sample as u64))?)
}

pub fn fuzz(qubits: usize, count: usize, seed: u64, tolerance: f64) -> Result<FuzzSummary, CliError> {
    let options = EvalOptions {
        state_id: String::new(),
        tolerance,
        roles: None,
    };
    let mut summary = FuzzSummary {
        qubits,
        count,
        seed,
        tolerance,
        inequalities: Vec::new(),
        violations: 0,
        violating_samples: Vec::new(),
    };
    let mut index: HashMap<String, usize> = HashMap::new();
    for start in (0..count).step_by(CHUNK) {
        let reports: Vec<BoundReport> = (start..count.min(start + CHUNK))
            .into_par_iter()
            .map(|sample| Ok(evaluate_with(&sample_state(qubits, seed, sample)?, &options)?))
            .collect::<Result<_, CliError>>()?;
        for (offset, report) in reports.iter().enumerate() {
            let sample = start + offset;
            let mut violated = false;
            for entry in &report.entries {
                let slot = *index.entry(entry.inequality.clone()).or_insert_with(|| {
                    summary.inequalities.push(InequalityStats {
                        inequality: entry.inequality.clone(),
                        evaluated: 0,
                        min_slack: f64::INFINITY,
                        worst_sample: sample,
                        violations: 0,
                    });
                    summary.inequalities.len() - 1
                });
                let stats = &mut summary.inequalities[slot];
                stats.evaluated += 1;
                if entry.slack < stats.min_slack {
                    stats.min_slack = entry.slack;
                    stats.worst_sample = sample;
                }
                if !entry.satisfied {
                    stats.violations += 1;
                    summary.violations += 1;
                    violated = true;
                }
            }
            if violated {
                summary.violating_samples.push(sample);
            }
        }
    }
    Ok(summary)
}

/// Writes the state behind `sample` next to the output (or into the working directory).
fn dump_state(summary: &FuzzSummary, sample: usize, out: Option<&Path>) -> Result<PathBuf, CliError> {
    let dir = out
        .and_then(Path::parent)
        .filter(|p| !p.as_os_str().is_empty())
        .map_or_else(|| PathBuf::from("."), Path::to_path_buf);
    let path = dir.join(format!(
        "fuzz-violation-q{}-seed{}-sample{}.json",
        summary.qubits, summary.seed, sample
    ));
    let state = sample_state(summary.qubits, summary.seed, sample)?;
    std::fs::write(&path, serialize_state(&state)).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

pub fn run(
    qubits: usize,
    count: usize,
    seed: u64,
    tolerance: f64,
    out: Option<&Path>,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let summary = fuzz(qubits, count, seed, tolerance)?;
    let document = match format {
        Format::Json => summary.to_json(),
        Format::Csv => summary.to_csv(),
    };
    emit(out, &document, stdout)?;
    let Some(&first) = summary.violating_samples.first() else {
        return Ok(ExitStatus::Success);
    };
    let path = dump_state(&summary, first, out)?;
    eprintln!(
        "{} violation(s) in {} sample(s); first offending state written to {}",
        summary.violations,
        summary.violating_samples.len(),
        path.display()
    );
    Ok(ExitStatus::Violation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_clean() {
        let a = fuzz(4, 20, 7, 1e-7).unwrap();
        assert_eq!(a, fuzz(4, 20, 7, 1e-7).unwrap());
        assert_eq!(a.violations, 0);
        assert!(a.inequalities.iter().all(|s| s.evaluated == 20 && s.min_slack >= -1e-7));
    }

    #[test]
    fn dumped_state_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let summary = fuzz(3, 1, 5, 1e-7).unwrap();
        let path = dump_state(&summary, 0, Some(&dir.path().join("summary.json"))).unwrap();
        assert_eq!(path.parent(), Some(dir.path()));
        let parsed = monogamy_core::state_file::parse_state(&std::fs::read_to_string(path).unwrap()).unwrap();
        let original = sample_state(3, 5, 0).unwrap();
        for (a, b) in parsed.amplitudes().iter().zip(original.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn chunk_boundaries_do_not_change_results() {
        let whole = fuzz(3, CHUNK + 3, 1, 1e-7).unwrap();
        let stats = whole
            .inequalities
            .iter()
            .find(|s| s.inequality == "theorem1_lower")
            .unwrap();
        assert_eq!(stats.evaluated, CHUNK + 3);
    }
}
