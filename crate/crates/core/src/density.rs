//! Density matrices over labeled qubit subsets.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{index_maps, normalize_qubit_set, symmetrize};
use crate::tolerance;

/// Hermitian, positive semidefinite, trace-one matrix over `qubit_labels`.
///
/// Labels are ascending and name qubits of the global register the matrix was
/// reduced from; label `k` is the `k`-th most significant bit of the local index.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    qubit_labels: Vec<usize>,
    matrix: DMatrix<Complex64>,
}

/// Eigenvalues (descending, clamped at zero) with their eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates every density-matrix invariant.
    pub fn new(qubit_labels: Vec<usize>, matrix: DMatrix<Complex64>) -> Result<Self> {
        let mut sorted = qubit_labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let dim = 1usize << qubit_labels.len();
        if qubit_labels.is_empty() || sorted != qubit_labels || matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::MatrixShape);
        }
        let dm = Self { qubit_labels, matrix };
        let deviation = dm.hermitian_deviation();
        if deviation > tolerance::HERMITIAN {
            return Err(Error::NotHermitian(deviation));
        }
        let trace = dm.trace();
        if (trace - 1.0).abs() > tolerance::TRACE {
            return Err(Error::BadTrace(trace));
        }
        dm.spectrum()?;
        Ok(dm)
    }

    pub(crate) fn from_parts_unchecked(qubit_labels: Vec<usize>, matrix: DMatrix<Complex64>) -> Self {
        Self { qubit_labels, matrix }
    }

    /// `I / 2^k` over `qubit_labels`.
    pub fn maximally_mixed(qubit_labels: Vec<usize>) -> Result<Self> {
        let dim = 1usize << qubit_labels.len();
        let matrix = DMatrix::from_diagonal_element(dim, dim, Complex64::new(1.0 / dim as f64, 0.0));
        Self::new(qubit_labels, matrix)
    }

    /// `sum_i p_i |ψ_i><ψ_i|` for normalized amplitude vectors of equal length.
    pub fn from_mixture(qubit_labels: Vec<usize>, members: &[(f64, Vec<Complex64>)]) -> Result<Self> {
        let dim = 1usize << qubit_labels.len();
        let mut matrix = DMatrix::<Complex64>::zeros(dim, dim);
        for (p, amplitudes) in members {
            if amplitudes.len() != dim {
                return Err(Error::MatrixShape);
            }
            let v = nalgebra::DVector::from_column_slice(amplitudes);
            matrix += (&v * v.adjoint()) * Complex64::new(*p, 0.0);
        }
        symmetrize(&mut matrix);
        Self::new(qubit_labels, matrix)
    }

    pub fn qubit_labels(&self) -> &[usize] {
        &self.qubit_labels
    }

    pub fn n_qubits(&self) -> usize {
        self.qubit_labels.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// `Tr(ρ²)`, computed as the squared Frobenius norm of a Hermitian matrix.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `T(ρ) = 1 - Tr(ρ²)`.
    ///
    /// Evaluated as `(Tr ρ)² - Tr(ρ²) = 2 Σ_{i<j} (ρ_ii ρ_jj - |ρ_ij|²)`: for a rank-one
    /// marginal every term cancels on its own, so product cuts give 0 rather
    /// than a rounding residue whose square root would be visible.
    pub fn linear_entropy(&self) -> f64 {
        let m = &self.matrix;
        let mut sum = 0.0;
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                sum += m[(i, i)].re * m[(j, j)].re - m[(i, j)].norm_sqr();
            }
        }
        (2.0 * sum).max(0.0)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        if self.matrix.shape() != other.matrix.shape() {
            return f64::INFINITY;
        }
        self.matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Eigendecomposition with eigenvalues in `[-PSD_FLOOR, 0)` clamped to zero.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let eigen = SymmetricEigen::new(self.matrix.clone());
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| eigen.eigenvalues[b].total_cmp(&eigen.eigenvalues[a]));
        let mut values = Vec::with_capacity(order.len());
        let mut vectors = DMatrix::<Complex64>::zeros(self.dim(), self.dim());
        for (column, &k) in order.iter().enumerate() {
            let value = eigen.eigenvalues[k];
            if value < -tolerance::PSD_FLOOR {
                return Err(Error::NotPositive(value));
            }
            values.push(value.max(0.0));
            vectors.set_column(column, &eigen.eigenvectors.column(k));
        }
        Ok(Spectrum { values, vectors })
    }

    /// Reduced density matrix on `keep`, a subset of this matrix's labels.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep = normalize_qubit_set(keep, usize::MAX)?;
        let mut positions = Vec::with_capacity(keep.len());
        for &label in &keep {
            match self.qubit_labels.binary_search(&label) {
                Ok(position) => positions.push(position),
                Err(_) => {
                    return Err(Error::QubitOutOfRange {
                        index: label,
                        n_qubits: self.n_qubits(),
                    })
                }
            }
        }
        let (kept_index, rest_index) = index_maps(self.n_qubits(), &positions);
        let kept_dim = 1usize << keep.len();
        let mut matrix = DMatrix::<Complex64>::zeros(kept_dim, kept_dim);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if rest_index[i] == rest_index[j] {
                    matrix[(kept_index[i], kept_index[j])] += self.matrix[(i, j)];
                }
            }
        }
        symmetrize(&mut matrix);
        Ok(DensityMatrix::from_parts_unchecked(keep, matrix))
    }
}
