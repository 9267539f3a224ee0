//! Named states used throughout the examples and tests.

use nalgebra::DVector;

use crate::hilbert::{DensityMatrix, PartyDims, PureState, C64};
use crate::{Error, Result};

/// `(1/√d) Σ_i |i…i⟩` over `n` qudits.
pub fn ghz(n: usize, d: usize) -> Result<PureState> {
    let coeffs = vec![1.0; d];
    generalized_ghz(n, &coeffs)
}

/// `Σ_i c_i |i…i⟩` over `n` qudits of dimension `coeffs.len()`; the
/// coefficients are normalized.
pub fn generalized_ghz(n: usize, coeffs: &[f64]) -> Result<PureState> {
    let d = coeffs.len();
    let dims = PartyDims::uniform(n, d)?;
    let mut amps = DVector::zeros(dims.total());
    for (i, &c) in coeffs.iter().enumerate() {
        amps[dims.index_of(&vec![i; n])] = C64::new(c, 0.0);
    }
    PureState::from_unnormalized(dims, amps)
}

/// `(1/√n) Σ_j |0…1_j…0⟩` over `n` qubits.
pub fn w(n: usize) -> Result<PureState> {
    let dims = PartyDims::qubits(n)?;
    let mut amps = DVector::zeros(dims.total());
    for j in 0..n {
        amps[1 << (n - 1 - j)] = C64::new(1.0, 0.0);
    }
    PureState::from_unnormalized(dims, amps)
}

/// `p|W₃⟩⟨W₃| + (1 − p) I/8`.
pub fn noisy_w(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("mixing weight {p} outside [0, 1]")));
    }
    let w = w(3)?.to_density();
    let noise = DensityMatrix::maximally_mixed(PartyDims::qubits(3)?);
    DensityMatrix::mix(p, &w, &noise)
}

/// `½(|100⟩ + |010⟩) + (1/√2)|001⟩`: a W-type state whose single-party
/// cuts are less entangled than the `{2}` cut.
pub fn skewed_w() -> Result<PureState> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    PureState::from_terms(
        PartyDims::qubits(3)?,
        &[(&[1, 0, 0], 0.5), (&[0, 1, 0], 0.5), (&[0, 0, 1], h)],
    )
}
