//! JSON state files.
//!
//! ```json
//! {
//!   "n_qubits": 2,
//!   "amplitudes": [[7.0710678118654746e-1, 0.0000000000000000e0], ...]
//! }
//! ```
//!
//! Amplitude `k` belongs to the basis state whose big-endian bit string is `k`.
//! Writers emit 17 significant digits; readers accept a squared norm within
//! [`FILE_NORM`](crate::tolerance::FILE_NORM) of one and renormalize.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::state::{check_qubit_count, squared_norm};
use crate::{tolerance, PureState};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDocument {
    n_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

pub fn serialize_state(state: &PureState) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{\n  \"n_qubits\": {},\n  \"amplitudes\": [", state.n_qubits());
    let last = state.dim() - 1;
    for (k, a) in state.amplitudes().iter().enumerate() {
        let sep = if k == last { "" } else { "," };
        let _ = writeln!(out, "    [{:.16e}, {:.16e}]{sep}", a.re, a.im);
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn parse_state(content: &str) -> Result<PureState> {
    let doc: StateDocument = serde_json::from_str(content).map_err(|e| Error::MalformedStateFile(e.to_string()))?;
    check_qubit_count(doc.n_qubits)?;
    let expected = 1usize << doc.n_qubits;
    if doc.amplitudes.len() != expected {
        return Err(Error::AmplitudeLength {
            expected,
            found: doc.amplitudes.len(),
        });
    }
    let amplitudes: Vec<Complex64> = doc.amplitudes.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
    let norm_sqr = squared_norm(&amplitudes);
    if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > tolerance::FILE_NORM {
        return Err(Error::NotNormalized(norm_sqr));
    }
    PureState::normalized(doc.n_qubits, amplitudes)
}
