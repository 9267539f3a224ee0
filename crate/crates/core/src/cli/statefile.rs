//! JSON state files.
//!
//! ```json
//! {"dims": [2, 2, 2], "kind": "pure", "data": [[re, im], ...]}
//! ```
//!
//! Pure states list `Π dims` amplitudes; density matrices list `(Π dims)²`
//! entries in row-major order. Basis order is row-major over parties.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::hilbert::{DensityMatrix, PartyDims, PureState, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Density,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub kind: StateKind,
    pub data: Vec<[f64; 2]>,
}

/// A parsed state of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyState {
    Pure(PureState),
    Density(DensityMatrix),
}

impl AnyState {
    pub fn to_density(&self) -> DensityMatrix {
        match self {
            Self::Pure(p) => p.to_density(),
            Self::Density(d) => d.clone(),
        }
    }

    pub fn dims(&self) -> &PartyDims {
        match self {
            Self::Pure(p) => p.dims(),
            Self::Density(d) => d.dims(),
        }
    }
}

fn pack(values: impl Iterator<Item = C64>) -> Vec<[f64; 2]> {
    values.map(|z| [z.re, z.im]).collect()
}

impl StateFile {
    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            dims: psi.dims().as_slice().to_vec(),
            kind: StateKind::Pure,
            data: pack(psi.amplitudes().iter().copied()),
        }
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let n = m.nrows();
        Self {
            dims: rho.dims().as_slice().to_vec(),
            kind: StateKind::Density,
            data: pack((0..n).flat_map(|i| (0..n).map(move |j| m[(i, j)]))),
        }
    }

    pub fn from_state(state: &AnyState) -> Self {
        match state {
            AnyState::Pure(p) => Self::from_pure(p),
            AnyState::Density(d) => Self::from_density(d),
        }
    }

    /// Validates the file against the state invariants.
    pub fn into_state(self) -> Result<AnyState, CliError> {
        let dims = PartyDims::new(self.dims)?;
        let values: Vec<C64> = self.data.iter().map(|&[re, im]| C64::new(re, im)).collect();
        match self.kind {
            StateKind::Pure => Ok(AnyState::Pure(PureState::new(dims, DVector::from_vec(values))?)),
            StateKind::Density => {
                let n = dims.total();
                if values.len() != n * n {
                    return Err(crate::Error::DimensionMismatch {
                        expected: n * n,
                        found: values.len(),
                    }
                    .into());
                }
                let m = DMatrix::from_row_slice(n, n, &values);
                Ok(AnyState::Density(DensityMatrix::new(dims, m)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state files serialize")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn read_state(path: &Path) -> Result<AnyState, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    StateFile::parse(&text)?.into_state()
}

pub fn write_state(path: &Path, state: &AnyState) -> Result<(), CliError> {
    std::fs::write(path, StateFile::from_state(state).to_json())
        .map_err(|e| CliError::Io(path.display().to_string(), e))
}
