use nalgebra::{DMatrix, DVector};

use super::linalg::{hermitian_deviation, hermitian_eigenvalues};
use super::C64;
use crate::{Error, Result};

const NORM_TOL: f64 = 1e-9;
const HERMITIAN_TOL: f64 = 1e-10;
const PSD_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-9;

/// Local dimensions of each party, party 0 first.
///
/// Basis indices are row-major over parties: party 0 is the slowest digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartyDims(Vec<usize>);

impl PartyDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidDims("at least one party is required".into()));
        }
        if let Some(d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidDims(format!("local dimension {d} is below 2")));
        }
        if dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).is_none() {
            return Err(Error::InvalidDims("total dimension overflows".into()));
        }
        Ok(Self(dims))
    }

    /// `n` parties of local dimension `d`.
    pub fn uniform(n: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; n])
    }

    pub fn qubits(n: usize) -> Result<Self> {
        Self::uniform(n, 2)
    }

    pub fn parties(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self, party: usize) -> usize {
        self.0[party]
    }

    /// Product of the local dimensions of `parties`.
    pub fn subsystem_dim(&self, parties: &[usize]) -> usize {
        parties.iter().map(|&k| self.0[k]).product()
    }

    /// Dimensions of a subset of parties, in the given order.
    pub fn restrict(&self, parties: &[usize]) -> Result<Self> {
        Self::new(parties.iter().map(|&k| self.0[k]).collect())
    }

    /// Mixed-radix digits of a basis index.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for (slot, &d) in out.iter_mut().zip(&self.0).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.0).fold(0, |acc, (&digit, &d)| acc * d + digit)
    }

    /// Splits a full basis index into the index over `keep` (in the given
    /// order) and the index over the remaining parties (ascending).
    pub(crate) fn split_index(&self, index: usize, keep: &[usize]) -> (usize, usize) {
        let digits = self.digits(index);
        let mut kept = 0;
        for &k in keep {
            kept = kept * self.0[k] + digits[k];
        }
        let mut rest = 0;
        for (k, (&digit, &d)) in digits.iter().zip(&self.0).enumerate() {
            if !keep.contains(&k) {
                rest = rest * d + digit;
            }
        }
        (kept, rest)
    }
}

/// Scales a nonzero vector to unit Euclidean norm.
pub fn normalize(v: &DVector<C64>) -> Result<DVector<C64>> {
    let norm = v.norm();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::DegenerateState);
    }
    Ok(v.unscale(norm))
}

/// A normalized state vector over a multi-qudit Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: PartyDims,
    amplitudes: DVector<C64>,
}

impl PureState {
    /// Wraps amplitudes that are already normalized to within 1e-9.
    pub fn new(dims: PartyDims, amplitudes: DVector<C64>) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { dims, amplitudes })
    }

    /// Normalizes `amplitudes` before wrapping them.
    pub fn from_unnormalized(dims: PartyDims, amplitudes: DVector<C64>) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                found: amplitudes.len(),
            });
        }
        let amplitudes = normalize(&amplitudes)?;
        Ok(Self { dims, amplitudes })
    }

    /// Real superposition of basis states given as `(digits, amplitude)`.
    pub fn from_terms(dims: PartyDims, terms: &[(&[usize], f64)]) -> Result<Self> {
        let mut amps = DVector::zeros(dims.total());
        for (digits, amp) in terms {
            if digits.len() != dims.parties() {
                return Err(Error::DimensionMismatch {
                    expected: dims.parties(),
                    found: digits.len(),
                });
            }
            if digits.iter().zip(dims.as_slice()).any(|(&x, &d)| x >= d) {
                return Err(Error::InvalidParameter(format!("basis digits {digits:?} out of range")));
            }
            amps[dims.index_of(digits)] += C64::new(*amp, 0.0);
        }
        Self::from_unnormalized(dims, amps)
    }

    pub fn basis(dims: PartyDims, index: usize) -> Result<Self> {
        if index >= dims.total() {
            return Err(Error::InvalidParameter(format!("basis index {index} out of range")));
        }
        let mut amps = DVector::zeros(dims.total());
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self { dims, amplitudes: amps })
    }

    pub(crate) fn from_parts_unchecked(dims: PartyDims, amplitudes: DVector<C64>) -> Self {
        debug_assert_eq!(amplitudes.len(), dims.total());
        Self { dims, amplitudes }
    }

    pub fn dims(&self) -> &PartyDims {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.parties()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<C64> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.total(),
                found: other.dims.total(),
            });
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Tensor product `self ⊗ other`, with `other`'s parties appended.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let mut dims = self.dims.as_slice().to_vec();
        dims.extend_from_slice(other.dims.as_slice());
        let amps = self.amplitudes.kronecker(&other.amplitudes);
        Self {
            dims: PartyDims(dims),
            amplitudes: amps,
        }
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            dims: self.dims.clone(),
            matrix: &self.amplitudes * self.amplitudes.adjoint(),
        }
    }
}

/// A Hermitian, positive semidefinite, unit-trace operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: PartyDims,
    matrix: DMatrix<C64>,
}

impl DensityMatrix {
    /// Validates Hermiticity (1e-10), positivity (eigenvalues ≥ -1e-10) and
    /// unit trace (1e-9).
    pub fn new(dims: PartyDims, matrix: DMatrix<C64>) -> Result<Self> {
        let n = dims.total();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        let deviation = hermitian_deviation(&matrix);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        let eigs = hermitian_eigenvalues(&matrix)?;
        let min_eigenvalue = eigs.iter().copied().fold(f64::INFINITY, f64::min);
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self { dims, matrix })
    }

    pub(crate) fn from_parts_unchecked(dims: PartyDims, matrix: DMatrix<C64>) -> Self {
        debug_assert_eq!(matrix.nrows(), dims.total());
        Self { dims, matrix }
    }

    /// `I / D`.
    pub fn maximally_mixed(dims: PartyDims) -> Self {
        let n = dims.total();
        let matrix = DMatrix::identity(n, n).unscale(n as f64);
        Self { dims, matrix }
    }

    /// `weight·a + (1 − weight)·b`.
    pub fn mix(weight: f64, a: &DensityMatrix, b: &DensityMatrix) -> Result<Self> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidParameter(format!(
                "mixing weight {weight} outside [0, 1]"
            )));
        }
        if a.dims != b.dims {
            return Err(Error::DimensionMismatch {
                expected: a.dims.total(),
                found: b.dims.total(),
            });
        }
        Ok(Self {
            dims: a.dims.clone(),
            matrix: a.matrix.scale(weight) + b.matrix.scale(1.0 - weight),
        })
    }

    pub fn dims(&self) -> &PartyDims {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.parties()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }
}

impl From<&PureState> for DensityMatrix {
    fn from(psi: &PureState) -> Self {
        psi.to_density()
    }
}
