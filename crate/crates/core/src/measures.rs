//! Bipartite entanglement functionals of a Schmidt spectrum and their
//! geometric mean over all bipartitions.
//!
//! For a pure state `|φ⟩` and a symmetric concave `f` that vanishes exactly
//! on pure probability vectors, the bipartite value on `γ|γ̄` is
//! `f(λ_γ)` and the multipartite value is
//! `(Π_γ f(λ_γ))^(1/c)` with `c` the number of bipartitions.

use std::fmt;
use std::sync::Arc;

use crate::bipartition::{self, Bipartition};
use crate::hilbert::{check_eps, schmidt_spectrum, DensityMatrix, PureState, SchmidtSpectrum};
use crate::{Error, Result};

/// Floor applied to each factor before taking logarithms.
const LOG_FLOOR: f64 = 1e-300;

type SpectralFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// A user supplied symmetric function on probability vectors.
///
/// Construction probes the function on a fixed set of vectors of length 2
/// to 4 and rejects it unless it is nonnegative, permutation symmetric, and
/// zero exactly on pure vectors.
#[derive(Clone)]
pub struct CustomMeasure {
    name: String,
    f: Arc<SpectralFn>,
}

impl CustomMeasure {
    pub fn new<F>(name: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let name = name.into();
        validate_scfp(&name, &f)?;
        Ok(Self { name, f: Arc::new(f) })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn evaluate(&self, probabilities: &[f64]) -> f64 {
        (self.f)(probabilities)
    }
}

impl fmt::Debug for CustomMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomMeasure").field("name", &self.name).finish()
    }
}

fn probe_vectors() -> Vec<Vec<f64>> {
    vec![
        vec![1.0, 0.0],
        vec![0.5, 0.5],
        vec![0.8, 0.2],
        vec![0.999, 0.001],
        vec![1.0, 0.0, 0.0],
        vec![0.5, 0.3, 0.2],
        vec![1.0 / 3.0; 3],
        vec![0.6, 0.4, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.4, 0.3, 0.2, 0.1],
        vec![0.25; 4],
    ]
}

fn validate_scfp(name: &str, f: &SpectralFn) -> Result<()> {
    const ZERO_TOL: f64 = 1e-12;
    const SYM_TOL: f64 = 1e-9;
    for v in probe_vectors() {
        let base = f(&v);
        if !base.is_finite() || base < -ZERO_TOL {
            return Err(Error::NotScfp(format!(
                "{name}: f({v:?}) = {base} is negative or not finite"
            )));
        }
        let pure = v.contains(&1.0);
        if pure && base.abs() > ZERO_TOL {
            return Err(Error::NotScfp(format!(
                "{name}: f({v:?}) = {base} but the vector is pure"
            )));
        }
        if !pure && base <= ZERO_TOL {
            return Err(Error::NotScfp(format!(
                "{name}: f({v:?}) = {base} vanishes on a mixed vector"
            )));
        }
        // every cyclic shift and the reversal
        let mut variants: Vec<Vec<f64>> = (1..v.len())
            .map(|s| {
                let mut w = v.clone();
                w.rotate_left(s);
                w
            })
            .collect();
        variants.push(v.iter().rev().copied().collect());
        for w in variants {
            let value = f(&w);
            if (value - base).abs() > SYM_TOL {
                return Err(Error::NotScfp(format!(
                    "{name}: f({v:?}) = {base} but f({w:?}) = {value}"
                )));
            }
        }
    }
    Ok(())
}

/// Which bipartite functional to apply to each Schmidt spectrum.
#[derive(Debug, Clone)]
pub enum MeasureKind {
    /// `√(d/(d−1) · (1 − Σλ²))` with `d` the smaller side's dimension.
    Concurrence,
    /// `(Σ√λ)² − 1`.
    Negativity,
    /// `m (Π_{i<m} λ_i)^(1/m)` over the `m` nonvanishing entries; 0 if `m = 1`.
    GConcurrence,
    /// `1 − λ_max`.
    GeometricMeasure,
    Custom(CustomMeasure),
}

impl MeasureKind {
    pub fn name(&self) -> &str {
        match self {
            Self::Concurrence => "concurrence",
            Self::Negativity => "negativity",
            Self::GConcurrence => "gconcurrence",
            Self::GeometricMeasure => "geometric",
            Self::Custom(c) => c.name(),
        }
    }

    /// Evaluates the functional on one spectrum. Entries at or below the
    /// spectrum's rank tolerance are treated as exact zeros.
    pub fn evaluate(&self, spectrum: &SchmidtSpectrum) -> f64 {
        let probs = spectrum.truncated();
        let rank = spectrum.rank();
        if let Self::Custom(c) = self {
            return c.evaluate(&probs).max(0.0);
        }
        if rank <= 1 {
            return 0.0;
        }
        let value = match self {
            Self::Concurrence => {
                let d = spectrum.dmin() as f64;
                let sum: f64 = probs.iter().sum();
                let sq: f64 = probs.iter().map(|p| p * p).sum();
                // (Σλ)² − Σλ² = 2 Σ_{i<j} λ_i λ_j, without cancellation against 1
                (d / (d - 1.0) * (sum * sum - sq)).max(0.0).sqrt()
            }
            Self::Negativity => {
                let roots: f64 = probs.iter().map(|p| p.sqrt()).sum();
                roots * roots - 1.0
            }
            Self::GConcurrence => {
                let m = rank as f64;
                let log_mean = probs[..rank].iter().map(|p| p.ln()).sum::<f64>() / m;
                m * log_mean.exp()
            }
            Self::GeometricMeasure => 1.0 - probs[0],
            Self::Custom(_) => unreachable!(),
        };
        value.max(0.0)
    }
}

/// Bipartite value `f(λ_γ(ψ))`.
pub fn bipartite_measure(psi: &PureState, gamma: &Bipartition, kind: &MeasureKind, eps: f64) -> Result<f64> {
    let spectrum = schmidt_spectrum(psi, gamma, eps)?;
    Ok(kind.evaluate(&spectrum))
}

/// The geometric mean together with its per-bipartition factors.
#[derive(Debug, Clone, PartialEq)]
pub struct GbemResult {
    pub value: f64,
    pub per_bipartition: Vec<(Bipartition, f64)>,
}

impl GbemResult {
    pub fn min(&self) -> f64 {
        self.per_bipartition.iter().map(|x| x.1).fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.per_bipartition
            .iter()
            .map(|x| x.1)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Geometric mean of `values`, computed in log space; zero as soon as any
/// factor is at or below `zero_tol`.
pub(crate) fn geometric_mean(values: &[f64], zero_tol: f64) -> f64 {
    if values.iter().any(|&v| v <= zero_tol) {
        return 0.0;
    }
    let log_sum: f64 = values.iter().map(|v| v.max(LOG_FLOOR).ln()).sum();
    (log_sum / values.len() as f64).exp()
}

/// Geometric-mean multipartite measure of a pure state.
///
/// Mixed states need a convex roof and are not accepted here; see the
/// `bounds` module for fidelity lower bounds instead.
pub fn gbem(psi: &PureState, kind: &MeasureKind, eps: f64) -> Result<GbemResult> {
    check_eps(eps)?;
    let set = bipartition::enumerate(psi.parties())?;
    let per_bipartition = set
        .iter()
        .map(|g| Ok((*g, bipartite_measure(psi, g, kind, eps)?)))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<f64> = per_bipartition.iter().map(|x| x.1).collect();
    Ok(GbemResult {
        value: geometric_mean(&values, eps),
        per_bipartition,
    })
}

/// First bipartition across which `psi` has Schmidt rank 1, if any.
pub fn is_biseparable_pure(psi: &PureState, eps: f64) -> Result<Option<Bipartition>> {
    check_eps(eps)?;
    for g in bipartition::enumerate(psi.parties())?.iter() {
        if schmidt_spectrum(psi, g, eps)?.rank() == 1 {
            return Ok(Some(*g));
        }
    }
    Ok(None)
}

/// One diagonal pair `(a, b)` of an X state with its antidiagonal coherence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XPair {
    pub a: f64,
    pub b: f64,
    /// Magnitude of the coherence `ρ_{i, ī}`.
    pub z: f64,
}

/// An n-qubit density matrix supported on the diagonal and antidiagonal,
/// stored as `2^(n-1)` pairs `(|i⟩, |ī⟩)` with `i` ranging over indices whose
/// first qubit is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct XStateData {
    pairs: Vec<XPair>,
}

const X_TOL: f64 = 1e-10;

impl XStateData {
    pub fn new(pairs: Vec<XPair>) -> Result<Self> {
        let total: f64 = pairs.iter().map(|p| p.a + p.b).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::NotUnitTrace { trace: total });
        }
        for (i, p) in pairs.iter().enumerate() {
            if p.a < -X_TOL || p.b < -X_TOL || p.z < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "pair {i} has negative population or coherence magnitude"
                )));
            }
            let bound = (p.a.max(0.0) * p.b.max(0.0)).sqrt();
            if p.z > bound + 1e-9 {
                return Err(Error::XStatePositivity {
                    pair: i,
                    coherence: p.z,
                    bound,
                });
            }
        }
        Ok(Self { pairs })
    }

    /// Extracts the X structure of a qubit density matrix, rejecting
    /// off-X entries larger than 1e-10.
    pub fn from_density(rho: &DensityMatrix) -> Result<Self> {
        if rho.dims().as_slice().iter().any(|&d| d != 2) {
            return Err(Error::InvalidDims("X states are defined for qubits only".into()));
        }
        let m = rho.matrix();
        let n = m.nrows();
        let mut deviation: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j && i + j != n - 1 {
                    deviation = deviation.max(m[(i, j)].norm());
                }
            }
        }
        if deviation > X_TOL {
            return Err(Error::NotXState { deviation });
        }
        let pairs = (0..n / 2)
            .map(|i| XPair {
                a: m[(i, i)].re,
                b: m[(n - 1 - i, n - 1 - i)].re,
                z: m[(i, n - 1 - i)].norm(),
            })
            .collect();
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[XPair] {
        &self.pairs
    }

    /// `max_i (|z_i| − Σ_{j≠i} √(a_j b_j))`, which may be negative.
    pub fn coherence_margin(&self) -> f64 {
        let roots: Vec<f64> = self
            .pairs
            .iter()
            .map(|p| (p.a.max(0.0) * p.b.max(0.0)).sqrt())
            .collect();
        let total: f64 = roots.iter().sum();
        self.pairs
            .iter()
            .zip(&roots)
            .map(|(p, r)| p.z - (total - r))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Genuine multipartite concurrence of an X state:
/// `2 · max{0, max_i (|z_i| − Σ_{j≠i} √(a_j b_j))}`.
pub fn gmc_xstate(x: &XStateData) -> f64 {
    2.0 * x.coherence_margin().max(0.0)
}
