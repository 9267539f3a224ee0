use nalgebra::{DMatrix, DVector};

use super::linalg::{check_unitary, hermitian_eigenvalues};
use super::state::{DensityMatrix, PartyDims, PureState};
use super::C64;
use crate::bipartition::Bipartition;
use crate::{Error, Result};

/// Squared Schmidt coefficients of a pure state across one bipartition.
///
/// The vector has length `d_min`, the dimension of the smaller side, and is
/// sorted nonincreasing. Entries at or below `rank_epsilon` count as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    probabilities: Vec<f64>,
    rank_epsilon: f64,
}

impl SchmidtSpectrum {
    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn rank_epsilon(&self) -> f64 {
        self.rank_epsilon
    }

    /// Dimension of the smaller side of the cut.
    pub fn dmin(&self) -> usize {
        self.probabilities.len()
    }

    pub fn largest(&self) -> f64 {
        self.probabilities[0]
    }

    /// Schmidt rank: entries above `rank_epsilon`.
    pub fn rank(&self) -> usize {
        self.probabilities.iter().filter(|&&p| p > self.rank_epsilon).count()
    }

    /// Probabilities with entries at or below `rank_epsilon` set to zero.
    pub fn truncated(&self) -> Vec<f64> {
        self.probabilities
            .iter()
            .map(|&p| if p > self.rank_epsilon { p } else { 0.0 })
            .collect()
    }
}

fn check_same_dims(a: &PartyDims, b: &PartyDims) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a.total(),
            found: b.total(),
        });
    }
    Ok(())
}

fn check_bipartition(dims: &PartyDims, gamma: &Bipartition) -> Result<()> {
    if gamma.parties() != dims.parties() {
        return Err(Error::InvalidBipartition(format!(
            "bipartition over {} parties applied to a {}-party state",
            gamma.parties(),
            dims.parties()
        )));
    }
    Ok(())
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps <= 1e-6) {
        return Err(Error::InvalidParameter(format!(
            "rank tolerance {eps} outside (0, 1e-6]"
        )));
    }
    Ok(())
}

/// `⟨ψ|ρ|ψ⟩`.
pub fn fidelity(psi: &PureState, rho: &DensityMatrix) -> Result<f64> {
    check_same_dims(psi.dims(), rho.dims())?;
    let v = psi.amplitudes();
    let value = v.dotc(&(rho.matrix() * v));
    Ok(value.re)
}

/// Amplitudes reshaped into a `d_keep × d_rest` matrix; rows follow the
/// order of `keep`, columns the ascending order of the other parties.
pub fn amplitude_matrix(psi: &PureState, keep: &[usize]) -> DMatrix<C64> {
    let dims = psi.dims();
    let rest: Vec<usize> = (0..dims.parties()).filter(|k| !keep.contains(k)).collect();
    let mut m = DMatrix::zeros(dims.subsystem_dim(keep), dims.subsystem_dim(&rest));
    for (i, &a) in psi.amplitudes().iter().enumerate() {
        let (r, c) = dims.split_index(i, keep);
        m[(r, c)] = a;
    }
    m
}

/// Reduced state on the canonical side `γ` (tracing out `γ̄`).
pub fn reduced_density(psi: &PureState, gamma: &Bipartition) -> Result<DensityMatrix> {
    check_bipartition(psi.dims(), gamma)?;
    let keep = gamma.members();
    let m = amplitude_matrix(psi, &keep);
    let dims = psi.dims().restrict(&keep)?;
    Ok(DensityMatrix::from_parts_unchecked(dims, &m * m.adjoint()))
}

/// Schmidt probabilities across `γ|γ̄`, from whichever side is smaller.
pub fn schmidt_spectrum(psi: &PureState, gamma: &Bipartition, eps: f64) -> Result<SchmidtSpectrum> {
    check_eps(eps)?;
    check_bipartition(psi.dims(), gamma)?;
    let m = amplitude_matrix(psi, &gamma.members());
    let gram = if m.nrows() <= m.ncols() {
        &m * m.adjoint()
    } else {
        m.adjoint() * &m
    };
    let mut probabilities: Vec<f64> = hermitian_eigenvalues(&gram)?
        .into_iter()
        .map(|x| x.clamp(0.0, 1.0))
        .collect();
    probabilities.sort_by(|a, b| b.total_cmp(a));
    Ok(SchmidtSpectrum {
        probabilities,
        rank_epsilon: eps,
    })
}

/// Traces out every party not in `keep`. The result orders the kept
/// parties ascending.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let dims = rho.dims();
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() {
        return Err(Error::InvalidParameter(
            "partial trace needs at least one kept party".into(),
        ));
    }
    if let Some(&k) = keep.iter().find(|&&k| k >= dims.parties()) {
        return Err(Error::InvalidParameter(format!(
            "party {k} out of range for {} parties",
            dims.parties()
        )));
    }
    let kept_dims = dims.restrict(&keep)?;
    let rest: Vec<usize> = (0..dims.parties()).filter(|k| !keep.contains(k)).collect();
    let rest_dim = dims.subsystem_dim(&rest);

    // group full indices by their traced-out part
    let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rest_dim];
    for i in 0..dims.total() {
        let (k, r) = dims.split_index(i, &keep);
        groups[r].push((k, i));
    }
    let src = rho.matrix();
    let mut out = DMatrix::zeros(kept_dims.total(), kept_dims.total());
    for group in &groups {
        for &(a, i) in group {
            for &(b, j) in group {
                out[(a, b)] += src[(i, j)];
            }
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(kept_dims, out))
}

/// Partial transpose over `parties`. The result is Hermitian but generally
/// not positive; it is returned as a bare matrix.
pub fn partial_transpose(rho: &DensityMatrix, parties: &[usize]) -> Result<DMatrix<C64>> {
    let dims = rho.dims();
    if let Some(&k) = parties.iter().find(|&&k| k >= dims.parties()) {
        return Err(Error::InvalidParameter(format!(
            "party {k} out of range for {} parties",
            dims.parties()
        )));
    }
    let n = dims.total();
    let src = rho.matrix();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        let di = dims.digits(i);
        for j in 0..n {
            let dj = dims.digits(j);
            let (mut si, mut sj) = (di.clone(), dj.clone());
            for &k in parties {
                si[k] = dj[k];
                sj[k] = di[k];
            }
            out[(i, j)] = src[(dims.index_of(&si), dims.index_of(&sj))];
        }
    }
    Ok(out)
}

/// `I ⊗ … ⊗ op ⊗ … ⊗ I` with `op` on `party`. No unitarity check.
pub fn embed_local(dims: &PartyDims, party: usize, op: &DMatrix<C64>) -> Result<DMatrix<C64>> {
    if party >= dims.parties() {
        return Err(Error::InvalidParameter(format!(
            "party {party} out of range for {} parties",
            dims.parties()
        )));
    }
    let d = dims.dim(party);
    if op.nrows() != d || op.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: op.nrows().max(op.ncols()),
        });
    }
    let left: usize = dims.as_slice()[..party].iter().product();
    let right: usize = dims.as_slice()[party + 1..].iter().product();
    let id_l = DMatrix::<C64>::identity(left, left);
    let id_r = DMatrix::<C64>::identity(right, right);
    Ok(id_l.kronecker(op).kronecker(&id_r))
}

/// Applies a unitary on one party of a pure state.
pub fn apply_local_unitary(psi: &PureState, party: usize, u: &DMatrix<C64>) -> Result<PureState> {
    let dims = psi.dims();
    if party >= dims.parties() {
        return Err(Error::InvalidParameter(format!(
            "party {party} out of range for {} parties",
            dims.parties()
        )));
    }
    let d = dims.dim(party);
    if u.nrows() != d || u.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: u.nrows().max(u.ncols()),
        });
    }
    check_unitary(u)?;
    let stride: usize = dims.as_slice()[party + 1..].iter().product();
    let src = psi.amplitudes();
    let mut out = DVector::zeros(src.len());
    for (i, slot) in out.iter_mut().enumerate() {
        let digit = (i / stride) % d;
        let base = i - digit * stride;
        *slot = (0..d).map(|j| u[(digit, j)] * src[base + j * stride]).sum();
    }
    // renormalize away rounding drift
    let out = super::state::normalize(&out)?;
    Ok(PureState::from_parts_unchecked(dims.clone(), out))
}

/// Applies the channel `ρ ↦ Σ_k K_k ρ K_k†` on one party.
pub fn apply_local_channel(rho: &DensityMatrix, party: usize, kraus: &[DMatrix<C64>]) -> Result<DensityMatrix> {
    let mut out = DMatrix::zeros(rho.dims().total(), rho.dims().total());
    for k in kraus {
        let full = embed_local(rho.dims(), party, k)?;
        out += &full * rho.matrix() * full.adjoint();
    }
    Ok(DensityMatrix::from_parts_unchecked(rho.dims().clone(), out))
}
