use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("basis label {label:?} does not have length {expected} over {{0,1}}")]
    InvalidBasisLabel { label: String, expected: usize },
    #[error("state has no terms or all coefficients are zero")]
    ZeroState,
    #[error("qubit count {0} outside the supported range 1..={max}", max = crate::MAX_QUBITS)]
    QubitCountOutOfRange(usize),
    #[error("expected {expected} amplitudes, found {found}")]
    AmplitudeLength { expected: usize, found: usize },
    #[error("squared norm {0} deviates from 1")]
    NotNormalized(f64),
    #[error("qubit index {index} is not part of a {n_qubits}-qubit system")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("qubit set must be non-empty and free of duplicates")]
    InvalidQubitSet,
    #[error("partition must split all {0} qubits into two disjoint non-empty sides")]
    PartitionNotCovering(usize),
    #[error("matrix is not square with power-of-two dimension matching its labels")]
    MatrixShape,
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("trace {0} differs from 1")]
    BadTrace(f64),
    #[error("matrix has eigenvalue {0:e} below the positivity floor")]
    NotPositive(f64),
    #[error("operation needs exactly {expected} qubits, got {found}")]
    WrongQubitCount { expected: usize, found: usize },
    #[error("operation needs at least {min} qubits, got {found}")]
    TooFewQubits { min: usize, found: usize },
    #[error("state is not a generalized W-class state (support outside Hamming weight 1)")]
    NotWClass,
    #[error("ensemble size {size} invalid for rank {rank} (need rank <= size <= 8)")]
    EnsembleSize { size: usize, rank: usize },
    #[error("ensemble reconstructs the density matrix only to {0:e}")]
    Reconstruction(f64),
    #[error("state file is malformed: {0}")]
    MalformedStateFile(String),
}

impl Error {
    /// Stable machine-readable code, printed by the CLI on standard error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidBasisLabel { .. } => "E_BASIS_LABEL",
            Error::ZeroState => "E_ZERO_STATE",
            Error::QubitCountOutOfRange(_) => "E_QUBIT_COUNT",
            Error::AmplitudeLength { .. } => "E_LENGTH",
            Error::NotNormalized(_) => "E_NORMALIZATION",
            Error::QubitOutOfRange { .. } => "E_QUBIT_INDEX",
            Error::InvalidQubitSet => "E_QUBIT_SET",
            Error::PartitionNotCovering(_) => "E_PARTITION",
            Error::MatrixShape => "E_MATRIX_SHAPE",
            Error::NotHermitian(_) => "E_NOT_HERMITIAN",
            Error::BadTrace(_) => "E_TRACE",
            Error::NotPositive(_) => "E_NOT_PSD",
            Error::WrongQubitCount { .. } => "E_WRONG_QUBITS",
            Error::TooFewQubits { .. } => "E_TOO_FEW_QUBITS",
            Error::NotWClass => "E_NOT_WCLASS",
            Error::EnsembleSize { .. } => "E_ENSEMBLE_SIZE",
            Error::Reconstruction(_) => "E_RECONSTRUCTION",
            Error::MalformedStateFile(_) => "E_MALFORMED",
        }
    }
}
