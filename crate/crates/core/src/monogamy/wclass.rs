//! Generalized W-class states `a_1|10..0> + a_2|01..0> + ... + a_N|0..01>`.
//!
//! Every two-qubit marginal of such a state has `C = C_a = 2|a_p a_q|`, so the
//! two-sided bound below is stated with plain concurrences:
//!
//! `|Σ_t [C²(A_i A_t) - C²(A_j A_t)]| <= C²(A_i A_j | rest) <= 2C²(A_i A_j) + Σ_t [C²(A_i A_t) + C²(A_j A_t)]`
//!
//! with `t` ranging over all qubits other than `i` and `j`.

use num_complex::Complex64;
use rand::Rng;

use super::{Analysis, InequalityChain};
use crate::entanglement::bipartite_concurrence_squared;
use crate::error::{Error, Result};
use crate::state::PureState;
use crate::MAX_QUBITS;

/// Coefficient-normalization tolerance for [`wclass_state`].
const COEFFICIENT_NORM: f64 = 1e-10;
/// Amplitudes at or below this magnitude are ignored by the support check.
const SUPPORT_THRESHOLD: f64 = 1e-12;

/// `Σ_i a_i |0..1_i..0>`; qubit `i` carries coefficient `a_i`.
pub fn wclass_state(coefficients: &[Complex64]) -> Result<PureState> {
    let n = coefficients.len();
    if n < 3 {
        return Err(Error::TooFewQubits { min: 3, found: n });
    }
    if n > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange(n));
    }
    let norm_sqr: f64 = coefficients.iter().map(|a| a.norm_sqr()).sum();
    if (norm_sqr - 1.0).abs() > COEFFICIENT_NORM {
        return Err(Error::NotNormalized(norm_sqr));
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (i, a) in coefficients.iter().enumerate() {
        amplitudes[1 << (n - 1 - i)] = *a;
    }
    PureState::normalized(n, amplitudes)
}

/// Random coefficients: squared moduli uniform on the probability simplex,
/// phases uniform on `[0, 2π)`.
pub fn random_wclass_coefficients<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    // Normalized i.i.d. Exp(1) draws are Dirichlet(1, ..., 1).
    let weights: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = weights.iter().sum();
    weights
        .iter()
        .map(|w| Complex64::from_polar((w / total).sqrt(), rng.random_range(0.0..std::f64::consts::TAU)))
        .collect()
}

pub fn is_wclass(state: &PureState) -> bool {
    state.is_wclass_supported(SUPPORT_THRESHOLD)
}

/// Two-sided bound on `C²(A_i A_j | rest)` for a W-class state, `i < j`.
pub fn wclass_bounds(state: &PureState, i: usize, j: usize) -> Result<InequalityChain> {
    if !is_wclass(state) {
        return Err(Error::NotWClass);
    }
    let analysis = Analysis::new(state)?;
    wclass_bounds_from(&analysis, state, i, j)
}

pub(crate) fn wclass_bounds_from(
    analysis: &Analysis,
    state: &PureState,
    i: usize,
    j: usize,
) -> Result<InequalityChain> {
    let n = state.n_qubits();
    if i >= j || j >= n {
        return Err(Error::QubitOutOfRange {
            index: j.max(i),
            n_qubits: n,
        });
    }
    let others = || (0..n).filter(move |&t| t != i && t != j);
    let difference: f64 = others().map(|t| analysis.c2(i, t) - analysis.c2(j, t)).sum();
    let total: f64 = others().map(|t| analysis.c2(i, t) + analysis.c2(j, t)).sum();
    Ok(InequalityChain {
        lower: difference.abs(),
        mid: bipartite_concurrence_squared(state, &[i, j])?,
        upper: 2.0 * analysis.c2(i, j) + total,
    })
}
