use thiserror::Error;

/// Errors surfaced by the library. Unsatisfiability is a verdict, not an error;
/// only malformed inputs and impossible internal states land here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index out of range or repeated: {detail}")]
    QubitIndex { detail: String },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("matrix is not Hermitian (asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("local operator on qubit {qubit} is singular (|det| = {det:.3e})")]
    SingularLocal { qubit: usize, det: f64 },

    #[error("parse error at {field}: {message}")]
    Parse { field: String, message: String },

    #[error("instance has {n} qubits, above the dense-oracle cap of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("completion closure requires a homogeneous instance; pair ({i},{j}) has rank {rank}")]
    NonHomogeneous { i: usize, j: usize, rank: usize },

    #[error("invalid generator request: {0}")]
    Generator(String),

    #[error("{0}")]
    Usage(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
