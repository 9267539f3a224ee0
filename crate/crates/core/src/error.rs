use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate state: zero vector cannot be normalized")]
    DegenerateState,
    #[error("invalid party dimensions: {0}")]
    InvalidDims(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("state is not normalized: norm {norm}")]
    NotNormalized { norm: f64 },
    #[error("matrix is not Hermitian: max deviation {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error("density matrix does not have unit trace: trace {trace}")]
    NotUnitTrace { trace: f64 },
    #[error("matrix is not unitary: max deviation {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not in scfp: {0}")]
    NotScfp(String),
    #[error("not an X state: off-X entry magnitude {deviation:e}")]
    NotXState { deviation: f64 },
    #[error("X state positivity violated in pair {pair}: |z| = {coherence} > sqrt(ab) = {bound}")]
    XStatePositivity { pair: usize, coherence: f64, bound: f64 },
    #[error("no fidelity bound is defined for custom measures")]
    NoBoundForCustom,
    #[error("empty observable candidate list")]
    EmptyCandidates,
}
