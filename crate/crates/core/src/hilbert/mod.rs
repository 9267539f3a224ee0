//! State representations and the linear-algebra plumbing shared by every
//! other module.

mod linalg;
mod ops;
mod state;

pub use linalg::{hermitian_deviation, hermitian_eigenvalues, trace_norm, unitary_deviation};
pub(crate) use ops::check_eps;
pub use ops::{
    amplitude_matrix, apply_local_channel, apply_local_unitary, embed_local, fidelity, partial_trace,
    partial_transpose, reduced_density, schmidt_spectrum, SchmidtSpectrum,
};
pub use state::{normalize, DensityMatrix, PartyDims, PureState};

/// Double-precision complex scalar.
pub type C64 = num_complex::Complex64;
