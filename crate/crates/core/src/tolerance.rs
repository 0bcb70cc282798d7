//! Numerical tolerances shared by the library, the CLI and the test suites.

/// Squared-norm deviation allowed for a [`PureState`](crate::PureState).
pub const NORM: f64 = 1e-12;

/// Squared-norm deviation accepted when reading a state file; the state is
/// renormalized afterwards.
pub const FILE_NORM: f64 = 1e-6;

/// Max elementwise deviation from Hermiticity for a density matrix.
pub const HERMITIAN: f64 = 1e-12;

/// Deviation of a density matrix trace from 1.
pub const TRACE: f64 = 1e-12;

/// Eigenvalues in `[-PSD_FLOOR, 0)` are clamped to zero; anything lower is an error.
pub const PSD_FLOOR: f64 = 1e-10;

/// Eigenvalues of a two-qubit density matrix at or below this magnitude are
/// treated as exact zeros when building the spin-flip decomposition.
///
/// Eigensolver noise on a trace-one 4x4 Hermitian matrix is a few ulps; left in,
/// its square root would surface as ~1e-8 spurious concurrence.
pub const RANK_CUTOFF: f64 = 1e-13;

/// Satisfaction floor for monogamy inequalities: satisfied iff slack >= -INEQUALITY.
pub const INEQUALITY: f64 = 1e-7;

/// Equality assertions on reproduced values.
pub const EQUALITY: f64 = 1e-9;

/// Probability-sum tolerance for ensemble decompositions.
pub const ENSEMBLE_PROBABILITY: f64 = 1e-10;

/// Max elementwise reconstruction error of an ensemble decomposition.
pub const ENSEMBLE_RECONSTRUCTION: f64 = 1e-8;
