#![allow(dead_code)]

use monogamy_core::state::Gate1;
use monogamy_core::{DensityMatrix, PureState};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn ket(n: usize, labels: &[&str]) -> PureState {
    let terms: Vec<_> = labels.iter().map(|l| (*l, c(1.0))).collect();
    PureState::from_basis_terms(n, &terms).unwrap()
}

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Two-qubit mixture of `rank` Haar states with Dirichlet(1,..,1) weights.
pub fn random_mixed(rank: usize, rng: &mut ChaCha20Rng) -> DensityMatrix {
    let weights: Vec<f64> = (0..rank).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = weights.iter().sum();
    let members: Vec<(f64, Vec<Complex64>)> = weights
        .iter()
        .map(|w| {
            let psi = PureState::random_haar_with(2, rng).unwrap();
            (w / total, psi.into_amplitudes())
        })
        .collect();
    DensityMatrix::from_mixture(vec![0, 1], &members).unwrap()
}

/// Haar-random SU(2) element `[[a, -b*], [b, a*]]`.
pub fn random_su2(rng: &mut ChaCha20Rng) -> Gate1 {
    let col = PureState::random_haar_with(1, rng).unwrap();
    let (a, b) = (col.amplitudes()[0], col.amplitudes()[1]);
    [[a, -b.conj()], [b, a.conj()]]
}

pub fn apply_random_local_unitaries(state: &PureState, rng: &mut ChaCha20Rng) -> PureState {
    (0..state.n_qubits()).fold(state.clone(), |acc, q| {
        acc.apply_single_qubit(q, &random_su2(rng)).unwrap()
    })
}
