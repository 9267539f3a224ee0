//! Four-qubit generalized GHZ states under individual excitation exchange
//! with a vacuum environment.
//!
//! Each system qubit couples to its own environment qubit through
//! `|1_S 0_E⟩ → √p |1_S 0_E⟩ + √(1−p) |0_S 1_E⟩` (`|0_S 0_E⟩` is fixed), with
//! `p = e^{−δ(t)}`. Tracing out the environment leaves an amplitude-damping
//! channel on each qubit, and the evolved state stays an X state, so its
//! genuine multipartite concurrence has a closed form.

use std::f64::consts::FRAC_PI_2;

use nalgebra::DMatrix;

use crate::bounds::{bound_gbc, Convention};
use crate::hilbert::{apply_local_channel, DensityMatrix, PureState, C64};
use crate::measures::{gmc_xstate, XStateData};
use crate::{states, Error, Result, DEFAULT_RANK_EPS};

const PARTIES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampingParams {
    alpha: f64,
    p: f64,
}

impl DampingParams {
    pub fn new(alpha: f64, p: f64) -> Result<Self> {
        check_alpha(alpha)?;
        check_p(p)?;
        Ok(Self { alpha, p })
    }

    /// `p = e^{−δ}` for a nonnegative decay exponent `δ`.
    pub fn from_delta(alpha: f64, delta: f64) -> Result<Self> {
        if delta.is_nan() || delta < 0.0 {
            return Err(Error::InvalidParameter(format!("decay exponent {delta} is negative")));
        }
        Self::new(alpha, (-delta).exp())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// `δ = −ln p`; infinite at `p = 0`.
    pub fn delta(&self) -> f64 {
        -self.p.ln()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("alpha {alpha} outside [0, π/2]")));
    }
    Ok(())
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
    }
    Ok(())
}

/// `cos α |0000⟩ + sin α |1111⟩`.
pub fn ghz4_state(alpha: f64) -> Result<PureState> {
    check_alpha(alpha)?;
    states::generalized_ghz(PARTIES, &[alpha.cos(), alpha.sin()])
}

/// Kraus pair of the induced single-qubit channel:
/// `K₀ = diag(1, √p)`, `K₁ = √(1−p) |0⟩⟨1|`.
pub fn damping_channel_kraus(p: f64) -> Result<[DMatrix<C64>; 2]> {
    check_p(p)?;
    let zero = C64::new(0.0, 0.0);
    let k0 = DMatrix::from_row_slice(2, 2, &[C64::new(1.0, 0.0), zero, zero, C64::new(p.sqrt(), 0.0)]);
    let k1 = DMatrix::from_row_slice(2, 2, &[zero, C64::new((1.0 - p).sqrt(), 0.0), zero, zero]);
    Ok([k0, k1])
}

/// Applies the damping channel to every qubit of `ghz4_state(alpha)`.
pub fn evolve_system(alpha: f64, p: f64) -> Result<DensityMatrix> {
    let kraus = damping_channel_kraus(p)?;
    let mut rho = ghz4_state(alpha)?.to_density();
    for party in 0..PARTIES {
        rho = apply_local_channel(&rho, party, &kraus)?;
    }
    Ok(rho)
}

/// Genuine multipartite concurrence of the evolved state.
pub fn gmc(alpha: f64, p: f64) -> Result<f64> {
    let rho = evolve_system(alpha, p)?;
    Ok(gmc_xstate(&XStateData::from_density(&rho)?))
}

fn check_grid(grid: &[f64]) -> Result<()> {
    grid.iter().try_for_each(|&p| check_p(p))
}

/// `(p, GMC)` along `p_grid`.
pub fn gmc_curve(alpha: f64, p_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    check_grid(p_grid)?;
    p_grid.iter().map(|&p| Ok((p, gmc(alpha, p)?))).collect()
}

/// Where, along decreasing `p`, genuine entanglement disappears.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SuddenDeath {
    /// GMC vanishes for `p ≤ p*` and is positive above.
    At(f64),
    /// GMC stays positive for every `p > 0`.
    Never,
    /// The initial state is a product state.
    NoEntanglement,
}

impl SuddenDeath {
    pub fn threshold(&self) -> Option<f64> {
        match self {
            Self::At(p) => Some(*p),
            _ => None,
        }
    }
}

/// Locates the sudden-death point from the sign of the X-state coherence
/// margin. No closed form is used.
pub fn sudden_death_threshold(alpha: f64) -> Result<SuddenDeath> {
    check_alpha(alpha)?;
    if alpha == 0.0 {
        return Ok(SuddenDeath::NoEntanglement);
    }
    if alpha == FRAC_PI_2 {
        return Ok(SuddenDeath::At(1.0));
    }
    let margin =
        |p: f64| -> Result<f64> { Ok(XStateData::from_density(&evolve_system(alpha, p)?)?.coherence_margin()) };
    // the margin is p² times a function increasing in p; probe near zero
    const START: f64 = 1e-6;
    if margin(START)? > 0.0 {
        return Ok(SuddenDeath::Never);
    }
    if margin(1.0)? <= 0.0 {
        return Ok(SuddenDeath::At(1.0));
    }
    let (mut lo, mut hi) = (START, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if margin(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(SuddenDeath::At(0.5 * (lo + hi)))
}

/// Concurrence lower bound of the evolved state with `|GHZ₄⟩` as the
/// observable, along `p_grid`.
pub fn bound_curve_ghz4(alpha: f64, p_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    check_grid(p_grid)?;
    let observable = states::ghz(PARTIES, 2)?;
    p_grid
        .iter()
        .map(|&p| {
            let rho = evolve_system(alpha, p)?;
            let report = bound_gbc(&rho, &observable, Convention::Multiset, DEFAULT_RANK_EPS)?;
            Ok((p, report.value))
        })
        .collect()
}

/// `n + 1` evenly spaced points on `[0, 1]`.
pub fn unit_grid(n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..=n).map(|i| i as f64 / n as f64).collect()
}

#[cfg(test)]
pub(crate) fn system_dims() -> crate::PartyDims {
    crate::PartyDims::qubits(PARTIES).expect("four qubits")
}
