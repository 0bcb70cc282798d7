//! Concurrence-family entanglement measures.
//!
//! Two-qubit mixed-state concurrence and concurrence of assistance share the
//! spin-flip spectrum `λ1 >= λ2 >= λ3 >= λ4`, the square roots of the
//! eigenvalues of `ρ ρ̃` with `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`:
//!
//! * `C(ρ)   = max(0, λ1 - λ2 - λ3 - λ4)`
//! * `C_a(ρ) = λ1 + λ2 + λ3 + λ4`
//!
//! The λ are obtained as singular values of the complex-symmetric matrix
//! `τ = Vᵀ (σy⊗σy) V` where `ρ = V V†` is the subnormalized eigen-ensemble.
//! `τ τ†` has the same non-zero spectrum as `ρ ρ̃`, and going through singular
//! values avoids taking square roots of eigensolver noise.

mod oracle;

pub use oracle::{convex_roof_oracle, EnsembleDecomposition, EnsembleMember, OracleBudget, RoofMode};

use nalgebra::{DMatrix, SVD};
use num_complex::Complex64;
use serde::Serialize;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::state::{Partition, PureState};
use crate::tolerance;

/// Which convex-roof quantity a [`ConcurrenceValue`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConcurrenceKind {
    PureBipartite,
    MixedTwoQubit,
    Assistance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConcurrenceValue {
    pub value: f64,
    pub kind: ConcurrenceKind,
}

impl ConcurrenceValue {
    pub fn new(value: f64, kind: ConcurrenceKind) -> Self {
        debug_assert!(value >= 0.0);
        debug_assert!(kind == ConcurrenceKind::PureBipartite || value <= 1.0 + 1e-9);
        Self { value, kind }
    }

    pub fn squared(&self) -> f64 {
        self.value * self.value
    }
}

/// `C(|ψ>) = sqrt(2 (1 - Tr ρ_left²))` across a partition covering every qubit.
pub fn concurrence_pure(state: &PureState, partition: &Partition) -> Result<f64> {
    if !partition.covers(state.n_qubits()) {
        return Err(Error::PartitionNotCovering(state.n_qubits()));
    }
    Ok(bipartite_concurrence_squared(state, partition.left())?.sqrt())
}

/// `C²(|ψ>)` across `side | complement`, i.e. `2 T(ρ_side)`.
///
/// The smaller side is traced down to, since both marginals share their
/// non-zero spectrum.
pub fn bipartite_concurrence_squared(state: &PureState, side: &[usize]) -> Result<f64> {
    let partition = Partition::split(state.n_qubits(), side)?;
    let smaller = if partition.left().len() <= partition.right().len() {
        partition.left()
    } else {
        partition.right()
    };
    Ok(2.0 * state.partial_trace(smaller)?.linear_entropy())
}

fn check_two_qubit(dm: &DensityMatrix) -> Result<()> {
    if dm.n_qubits() == 2 {
        Ok(())
    } else {
        Err(Error::WrongQubitCount {
            expected: 2,
            found: dm.n_qubits(),
        })
    }
}

/// `σy⊗σy` is real with four non-zero entries.
const SPIN_FLIP: [(usize, usize, f64); 4] = [(0, 3, -1.0), (1, 2, 1.0), (2, 1, 1.0), (3, 0, -1.0)];

/// `(σy⊗σy) ρ* (σy⊗σy)`.
pub fn spin_flip(dm: &DensityMatrix) -> Result<DMatrix<Complex64>> {
    check_two_qubit(dm)?;
    let rho = dm.matrix();
    let mut out = DMatrix::<Complex64>::zeros(4, 4);
    for &(a, b, s) in &SPIN_FLIP {
        for &(c, d, t) in &SPIN_FLIP {
            out[(a, d)] += rho[(b, c)].conj() * (s * t);
        }
    }
    Ok(out)
}

/// `vᵀ (σy⊗σy) w`.
pub(crate) fn spin_flip_form(v: &[Complex64], w: &[Complex64]) -> Complex64 {
    SPIN_FLIP.iter().map(|&(a, b, s)| v[a] * w[b] * s).sum()
}

/// Columns `sqrt(μ_j) e_j` for the eigenpairs above [`tolerance::RANK_CUTOFF`].
pub(crate) fn eigen_ensemble(dm: &DensityMatrix) -> Result<Vec<Vec<Complex64>>> {
    let spectrum = dm.spectrum()?;
    Ok(spectrum
        .values
        .iter()
        .enumerate()
        .filter(|(_, &mu)| mu > tolerance::RANK_CUTOFF)
        .map(|(j, &mu)| spectrum.vectors.column(j).iter().map(|z| z * mu.sqrt()).collect())
        .collect())
}

/// Descending spin-flip spectrum `[λ1, λ2, λ3, λ4]`.
pub fn spin_flip_spectrum(dm: &DensityMatrix) -> Result<[f64; 4]> {
    check_two_qubit(dm)?;
    let columns = eigen_ensemble(dm)?;
    let rank = columns.len();
    let mut lambdas = [0.0; 4];
    if rank == 0 {
        return Ok(lambdas);
    }
    let tau = DMatrix::from_fn(rank, rank, |i, j| spin_flip_form(&columns[i], &columns[j]));
    let mut singular: Vec<f64> = SVD::new(tau, false, false).singular_values.iter().copied().collect();
    singular.sort_by(|a, b| b.total_cmp(a));
    for (slot, value) in lambdas.iter_mut().zip(singular) {
        *slot = value.max(0.0);
    }
    Ok(lambdas)
}

/// Two-qubit concurrence `max(0, λ1 - λ2 - λ3 - λ4)`.
pub fn wootters_concurrence(dm: &DensityMatrix) -> Result<f64> {
    let l = spin_flip_spectrum(dm)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Two-qubit concurrence of assistance `λ1 + λ2 + λ3 + λ4`.
pub fn concurrence_of_assistance(dm: &DensityMatrix) -> Result<f64> {
    Ok(spin_flip_spectrum(dm)?.iter().sum())
}

/// Residual tangle `C²(focus | rest) - C²(ρ_{focus,o1}) - C²(ρ_{focus,o2})` of a
/// three-qubit pure state.
pub fn three_tangle(state: &PureState, focus: usize) -> Result<f64> {
    if state.n_qubits() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            found: state.n_qubits(),
        });
    }
    if focus >= 3 {
        return Err(Error::QubitOutOfRange {
            index: focus,
            n_qubits: 3,
        });
    }
    let whole = bipartite_concurrence_squared(state, &[focus])?;
    let mut tangle = whole;
    for other in (0..3).filter(|&q| q != focus) {
        let pair = state.partial_trace(&[focus, other])?;
        tangle -= wootters_concurrence(&pair)?.powi(2);
    }
    Ok(tangle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ket(n: usize, labels: &[&str]) -> PureState {
        let terms: Vec<_> = labels.iter().map(|l| (*l, c(1.0))).collect();
        PureState::from_basis_terms(n, &terms).unwrap()
    }

    fn max_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
        a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn pure_concurrence_reference_values() {
        let saturating = ket(4, &["0000", "1001"]);
        let ab = Partition::split(4, &[0, 1]).unwrap();
        assert!((concurrence_pure(&saturating, &ab).unwrap() - 1.0).abs() < 1e-12);

        // As printed, qubit B is |0> in every term of |φ>, so only the AB|CD
        // value survives; the |1110> variant reproduces all three values.
        let a = Partition::split(4, &[0]).unwrap();
        let b = Partition::split(4, &[1]).unwrap();
        let printed = ket(4, &["0000", "0010", "1010"]);
        assert!((concurrence_pure(&printed, &ab).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((concurrence_pure(&printed, &a).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(concurrence_pure(&printed, &b).unwrap() < 1e-7);
        let phi = ket(4, &["0000", "0010", "1110"]);
        let expected = 2.0 * 2f64.sqrt() / 3.0;
        assert!((concurrence_pure(&phi, &ab).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((concurrence_pure(&phi, &a).unwrap() - expected).abs() < 1e-12);
        assert!((concurrence_pure(&phi, &b).unwrap() - expected).abs() < 1e-12);

        let zero = PureState::zero(4).unwrap();
        for left in [&[0][..], &[1, 3], &[0, 1, 2]] {
            let p = Partition::split(4, left).unwrap();
            assert!(concurrence_pure(&zero, &p).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn pure_concurrence_requires_covering_partition() {
        let zero = PureState::zero(3).unwrap();
        let partial = Partition::new(&[0], &[1]).unwrap();
        assert_eq!(concurrence_pure(&zero, &partial), Err(Error::PartitionNotCovering(3)));
    }

    #[test]
    fn spin_flip_reference_values() {
        let bell = ket(2, &["00", "11"]).projector();
        assert!(max_diff(&spin_flip(&bell).unwrap(), bell.matrix()) < 1e-15);

        let flipped = spin_flip(&ket(2, &["00"]).projector()).unwrap();
        assert!(max_diff(&flipped, ket(2, &["11"]).projector().matrix()) < 1e-15);

        let mixed = DensityMatrix::maximally_mixed(vec![0, 1]).unwrap();
        assert!(max_diff(&spin_flip(&mixed).unwrap(), mixed.matrix()) < 1e-15);

        let one_qubit = DensityMatrix::maximally_mixed(vec![0]).unwrap();
        assert!(matches!(spin_flip(&one_qubit), Err(Error::WrongQubitCount { .. })));
    }

    #[test]
    fn wootters_reference_values() {
        let bell = ket(2, &["00", "11"]).projector();
        assert!((wootters_concurrence(&bell).unwrap() - 1.0).abs() < 1e-12);

        let saturating = ket(4, &["0000", "1001"]);
        let ad = saturating.partial_trace(&[0, 3]).unwrap();
        assert!((wootters_concurrence(&ad).unwrap() - 1.0).abs() < 1e-12);
        let ac = saturating.partial_trace(&[0, 2]).unwrap();
        assert!(wootters_concurrence(&ac).unwrap().abs() < 1e-12);

        let w3 = ket(3, &["100", "010", "001"]);
        let ab = w3.partial_trace(&[0, 1]).unwrap();
        assert!((wootters_concurrence(&ab).unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn assistance_reference_values() {
        let saturating = ket(4, &["0000", "1001"]);
        let ad = saturating.partial_trace(&[0, 3]).unwrap();
        assert!((concurrence_of_assistance(&ad).unwrap() - 1.0).abs() < 1e-12);
        for pair in [[1, 2], [1, 3], [0, 1], [0, 2]] {
            let rho = saturating.partial_trace(&pair).unwrap();
            assert!(concurrence_of_assistance(&rho).unwrap().abs() < 1e-12, "{pair:?}");
        }
        let ghz3 = ket(3, &["000", "111"]);
        let ab = ghz3.partial_trace(&[0, 1]).unwrap();
        assert!((concurrence_of_assistance(&ab).unwrap() - 1.0).abs() < 1e-12);
        assert!(wootters_concurrence(&ab).unwrap().abs() < 1e-12);
    }

    #[test]
    fn three_tangle_reference_values() {
        let ghz3 = ket(3, &["000", "111"]);
        let w3 = ket(3, &["100", "010", "001"]);
        let zero = PureState::zero(3).unwrap();
        for focus in 0..3 {
            assert!((three_tangle(&ghz3, focus).unwrap() - 1.0).abs() < 1e-12);
            assert!(three_tangle(&w3, focus).unwrap().abs() < 1e-12);
            assert!(three_tangle(&zero, focus).unwrap().abs() < 1e-12);
        }
        assert!(matches!(
            three_tangle(&PureState::zero(4).unwrap(), 0),
            Err(Error::WrongQubitCount { expected: 3, found: 4 })
        ));
        assert!(three_tangle(&zero, 3).is_err());
    }

    #[test]
    fn pure_inputs_collapse_all_measures() {
        for seed in 0..50 {
            let psi = PureState::random_haar(2, seed).unwrap();
            let rho = psi.projector();
            let pure = concurrence_pure(&psi, &Partition::split(2, &[0]).unwrap()).unwrap();
            assert!((wootters_concurrence(&rho).unwrap() - pure).abs() < 1e-10);
            assert!((concurrence_of_assistance(&rho).unwrap() - pure).abs() < 1e-10);
        }
    }
}
