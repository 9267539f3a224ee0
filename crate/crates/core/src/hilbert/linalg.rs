//! Dense Hermitian eigenvalue kernel.
//!
//! Matrices here are at most a few thousand rows; nalgebra's
//! Householder-tridiagonal + implicit QR solver is used underneath.

use nalgebra::{DMatrix, SymmetricEigen};

use super::C64;
use crate::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-10;
const UNITARY_TOL: f64 = 1e-10;

/// Largest entrywise `|M - M†|`.
pub fn hermitian_deviation(m: &DMatrix<C64>) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigenvalues of a Hermitian matrix, sorted ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let deviation = hermitian_deviation(m);
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    // symmetrize so the solver sees an exactly Hermitian input
    let sym = (m + m.adjoint()).unscale(2.0);
    let mut eigs: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

/// Trace norm `Σ|λ_i|` of a Hermitian matrix.
pub fn trace_norm(m: &DMatrix<C64>) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
}

/// Largest entrywise deviation of `U†U` from the identity.
pub fn unitary_deviation(u: &DMatrix<C64>) -> f64 {
    if u.nrows() != u.ncols() {
        return f64::INFINITY;
    }
    let n = u.nrows();
    let prod = u.adjoint() * u;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((prod[(i, j)] - C64::new(target, 0.0)).norm());
        }
    }
    worst
}

pub(crate) fn check_unitary(u: &DMatrix<C64>) -> Result<()> {
    let deviation = unitary_deviation(u);
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}
