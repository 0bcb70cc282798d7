//! Dense pure states over `n` qubits.
//!
//! Qubit 0 is the leftmost character of a ket label and the most significant
//! bit of the amplitude index, so `|q0 q1 ... q(n-1)>` sits at index
//! `q0 * 2^(n-1) + ... + q(n-1)`. The monogamy bounds read qubit 0 as `A`,
//! qubit 1 as `B` and qubit `i + 1` as `C_i`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::{tolerance, MAX_QUBITS};

/// A 2x2 complex matrix in row-major order.
pub type Gate1 = [[Complex64; 2]; 2];

/// Normalized amplitude vector of length `2^n_qubits`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector that must already be normalized.
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        check_length(n_qubits, amplitudes.len())?;
        let norm_sqr = squared_norm(&amplitudes);
        if (norm_sqr - 1.0).abs() > tolerance::NORM {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self { n_qubits, amplitudes })
    }

    /// Scales an arbitrary non-zero amplitude vector to unit norm.
    pub fn normalized(n_qubits: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        check_length(n_qubits, amplitudes.len())?;
        let norm = squared_norm(&amplitudes).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroState);
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(Self { n_qubits, amplitudes })
    }

    /// Builds the normalized superposition `sum_k c_k |label_k>`.
    ///
    /// Repeated labels add their coefficients.
    pub fn from_basis_terms<S: AsRef<str>>(n_qubits: usize, terms: &[(S, Complex64)]) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        if terms.is_empty() {
            return Err(Error::ZeroState);
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        for (label, coefficient) in terms {
            let index = parse_basis_label(label.as_ref(), n_qubits)?;
            amplitudes[index] += coefficient;
        }
        Self::normalized(n_qubits, amplitudes)
    }

    /// `|0...0>`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amplitudes })
    }

    /// Haar-random state from a fixed seed.
    pub fn random_haar(n_qubits: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        Self::random_haar_with(n_qubits, &mut rng)
    }

    /// Haar-random state: a vector of i.i.d. standard complex Gaussians, normalized.
    pub fn random_haar_with<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        let amplitudes = (0..1usize << n_qubits)
            .map(|_| {
                Complex64::new(
                    rng.sample::<f64, _>(StandardNormal),
                    rng.sample::<f64, _>(StandardNormal),
                )
            })
            .collect();
        Self::normalized(n_qubits, amplitudes)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// Tensor product `self ⊗ other`; `other`'s qubits are appended after `self`'s.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let n_qubits = self.n_qubits + other.n_qubits;
        check_qubit_count(n_qubits)?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(PureState { n_qubits, amplitudes })
    }

    /// Applies a 2x2 unitary to one qubit.
    pub fn apply_single_qubit(&self, qubit: usize, gate: &Gate1) -> Result<PureState> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                n_qubits: self.n_qubits,
            });
        }
        let stride = 1usize << (self.n_qubits - 1 - qubit);
        let mut amplitudes = self.amplitudes.clone();
        for base in 0..self.dim() {
            if base & stride != 0 {
                continue;
            }
            let (a0, a1) = (self.amplitudes[base], self.amplitudes[base | stride]);
            amplitudes[base] = gate[0][0] * a0 + gate[0][1] * a1;
            amplitudes[base | stride] = gate[1][0] * a0 + gate[1][1] * a1;
        }
        PureState::normalized(self.n_qubits, amplitudes)
    }

    /// Reorders qubits so that new qubit `k` is old qubit `order[k]`.
    pub fn permute_qubits(&self, order: &[usize]) -> Result<PureState> {
        let n = self.n_qubits;
        if order.len() != n || normalize_qubit_set(order, n)?.len() != n {
            return Err(Error::InvalidQubitSet);
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (old_index, amplitude) in self.amplitudes.iter().enumerate() {
            let new_index = order.iter().fold(0usize, |acc, &old_qubit| {
                acc << 1 | (old_index >> (n - 1 - old_qubit)) & 1
            });
            amplitudes[new_index] = *amplitude;
        }
        Ok(PureState {
            n_qubits: n,
            amplitudes,
        })
    }

    /// True when every non-zero amplitude sits on a Hamming-weight-1 basis state.
    pub fn is_wclass_supported(&self, threshold: f64) -> bool {
        self.amplitudes
            .iter()
            .enumerate()
            .all(|(index, a)| index.count_ones() == 1 || a.norm() <= threshold)
    }

    /// `|ψ><ψ|` over all qubits.
    pub fn projector(&self) -> DensityMatrix {
        self.partial_trace(&(0..self.n_qubits).collect::<Vec<_>>())
            .expect("full qubit set is always a valid reduction")
    }

    /// Reduced density matrix on `keep`, with labels in ascending order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep = normalize_qubit_set(keep, self.n_qubits)?;
        let positions: Vec<usize> = keep.clone();
        let (kept_index, rest_index) = index_maps(self.n_qubits, &positions);
        let kept_dim = 1usize << keep.len();
        let rest_dim = 1usize << (self.n_qubits - keep.len());

        // Rows are kept-subsystem indices, columns enumerate the traced-out basis.
        let mut factor = DMatrix::<Complex64>::zeros(kept_dim, rest_dim);
        for (index, amplitude) in self.amplitudes.iter().enumerate() {
            factor[(kept_index[index], rest_index[index])] = *amplitude;
        }
        let mut matrix = &factor * factor.adjoint();
        symmetrize(&mut matrix);
        Ok(DensityMatrix::from_parts_unchecked(keep, matrix))
    }
}

/// Ordered pair of disjoint, non-empty qubit sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Partition {
    pub fn new(left: &[usize], right: &[usize]) -> Result<Self> {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        right.sort_unstable();
        let has_duplicates = |v: &[usize]| v.windows(2).any(|w| w[0] == w[1]);
        if left.is_empty() || right.is_empty() || has_duplicates(&left) || has_duplicates(&right) {
            return Err(Error::InvalidQubitSet);
        }
        if left.iter().any(|q| right.contains(q)) {
            return Err(Error::InvalidQubitSet);
        }
        Ok(Self { left, right })
    }

    /// `left | complement(left)` over `n_qubits`.
    pub fn split(n_qubits: usize, left: &[usize]) -> Result<Self> {
        let left = normalize_qubit_set(left, n_qubits)?;
        let right: Vec<usize> = (0..n_qubits).filter(|q| !left.contains(q)).collect();
        Self::new(&left, &right)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Checks `left ∪ right ⊆ {0, .., n_qubits - 1}`.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        match self.left.iter().chain(&self.right).find(|&&q| q >= n_qubits) {
            Some(&index) => Err(Error::QubitOutOfRange { index, n_qubits }),
            None => Ok(()),
        }
    }

    pub fn covers(&self, n_qubits: usize) -> bool {
        self.validate(n_qubits).is_ok() && self.left.len() + self.right.len() == n_qubits
    }
}

fn parse_basis_label(label: &str, n_qubits: usize) -> Result<usize> {
    let invalid = || Error::InvalidBasisLabel {
        label: label.to_string(),
        expected: n_qubits,
    };
    if label.len() != n_qubits {
        return Err(invalid());
    }
    label.chars().try_fold(0usize, |index, c| match c {
        '0' => Ok(index << 1),
        '1' => Ok(index << 1 | 1),
        _ => Err(invalid()),
    })
}

pub(crate) fn check_qubit_count(n_qubits: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n_qubits) {
        Ok(())
    } else {
        Err(Error::QubitCountOutOfRange(n_qubits))
    }
}

fn check_length(n_qubits: usize, found: usize) -> Result<()> {
    let expected = 1usize << n_qubits;
    if found == expected {
        Ok(())
    } else {
        Err(Error::AmplitudeLength { expected, found })
    }
}

pub(crate) fn squared_norm(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

/// Sorts `qubits` and checks it is a non-empty duplicate-free subset of `0..n_qubits`.
pub(crate) fn normalize_qubit_set(qubits: &[usize], n_qubits: usize) -> Result<Vec<usize>> {
    if qubits.is_empty() {
        return Err(Error::InvalidQubitSet);
    }
    let mut sorted = qubits.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidQubitSet);
    }
    if let Some(&index) = sorted.last().filter(|&&q| q >= n_qubits) {
        return Err(Error::QubitOutOfRange { index, n_qubits });
    }
    Ok(sorted)
}

/// For every basis index of an `n`-qubit register, the sub-index formed by the
/// bits at `positions` (ascending, most significant first) and the sub-index
/// formed by the remaining bits.
pub(crate) fn index_maps(n_qubits: usize, positions: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let dim = 1usize << n_qubits;
    let mut kept = Vec::with_capacity(dim);
    let mut rest = Vec::with_capacity(dim);
    for index in 0..dim {
        let (mut k, mut r) = (0usize, 0usize);
        for qubit in 0..n_qubits {
            let bit = (index >> (n_qubits - 1 - qubit)) & 1;
            if positions.binary_search(&qubit).is_ok() {
                k = k << 1 | bit;
            } else {
                r = r << 1 | bit;
            }
        }
        kept.push(k);
        rest.push(r);
    }
    (kept, rest)
}

/// Replaces `m` by `(m + m†) / 2`.
pub(crate) fn symmetrize(m: &mut DMatrix<Complex64>) {
    let n = m.nrows();
    for i in 0..n {
        m[(i, i)].im = 0.0;
        for j in i + 1..n {
            let mean = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            m[(i, j)] = mean;
            m[(j, i)] = mean.conj();
        }
    }
}

/// SplitMix64 mix of `seed` and `index`; gives each iteration of a seeded run its own stream.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
