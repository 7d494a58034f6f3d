use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("{0} qubits exceed the dense-matrix cap of {1}")]
    DenseCapExceeded(usize, usize),

    #[error("{0} qubits exceed the statevector cap of {1}")]
    QubitCapExceeded(usize, usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("conflicting integral entry at line {line}: index block already holds {previous}, got {value}")]
    ConflictingEntry {
        line: usize,
        previous: f64,
        value: f64,
    },

    #[error("invalid active space: {0}")]
    InvalidActiveSpace(String),

    #[error("open-shell reference (MS2 = {0}) is not supported")]
    OpenShell(i64),

    #[error("two-qubit tapering requires the parity encoding")]
    TaperRequiresParity,

    #[error("operator acts outside the tapered symmetry sector: {0}")]
    TaperSymmetryViolation(String),

    #[error("operator is not Hermitian: {0}")]
    NotHermitian(String),

    #[error("parameter arity mismatch: circuit has {expected} slots, got {got} values")]
    ParamArity { expected: usize, got: usize },

    #[error("parameter slots are not a contiguous range starting at 0 (missing slot {0})")]
    ParamSlotGap(usize),

    #[error("LAPACK eigensolver failed with info = {0}")]
    EigFailed(i32),

    #[error("optimizer produced a non-finite energy at evaluation {0}")]
    Diverged(usize),

    #[error("sampling requires at least one shot")]
    ZeroShots,

    #[error("exact cover search is capped at {cap} terms, got {got}")]
    ExactCoverCap { cap: usize, got: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<V> = std::result::Result<V, Error>;
