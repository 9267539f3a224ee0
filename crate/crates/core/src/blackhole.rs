//! Three-qubit generalized GHZ states shared with observers near a
//! Schwarzschild horizon, in the single-mode approximation for Dirac fields.
//!
//! A party that falls toward the horizon has its mode split into an
//! outside mode `X₁` and an inside mode `X₂` by the isometry
//! `|0⟩ → cos r |0₁0₂⟩ + sin r |1₁1₂⟩`, `|1⟩ → |1₁0₂⟩`, with
//! `cos r = (e^{−ω/T} + 1)^{−1/2}` and `sin r = (e^{ω/T} + 1)^{−1/2}`.

use nalgebra::DVector;

use crate::bounds::{bound_gbc, Convention};
use crate::hilbert::{partial_trace, DensityMatrix, PartyDims, PureState, C64};
use crate::{states, Error, Result, DEFAULT_RANK_EPS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkingParams {
    pub temperature: f64,
    pub omega: f64,
    pub theta: f64,
}

impl HawkingParams {
    pub fn new(temperature: f64, omega: f64, theta: f64) -> Result<Self> {
        check_params(theta, temperature, omega)?;
        Ok(Self {
            temperature,
            omega,
            theta,
        })
    }
}

fn check_params(theta: f64, temperature: f64, omega: f64) -> Result<()> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Hawking temperature {temperature} must be positive"
        )));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "field frequency {omega} must be positive"
        )));
    }
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::InvalidParameter(format!("theta {theta} outside [0, π/2]")));
    }
    Ok(())
}

/// `(cos r, sin r)` of the mode splitting at temperature `T`.
pub fn mode_transform(temperature: f64, omega: f64) -> Result<(f64, f64)> {
    check_params(0.0, temperature, omega)?;
    let x = omega / temperature;
    let cos_r = ((-x).exp() + 1.0).powf(-0.5);
    let sin_r = (x.exp() + 1.0).powf(-0.5);
    Ok((cos_r, sin_r))
}

/// Splits qubit `party` into an adjacent outside/inside pair.
fn split_mode(psi: &PureState, party: usize, cos_r: f64, sin_r: f64) -> PureState {
    let dims = psi.dims();
    let n = dims.parties();
    let out_dims = PartyDims::qubits(n + 1).expect("qubit register");
    let mut amps = DVector::zeros(out_dims.total());
    for (i, &a) in psi.amplitudes().iter().enumerate() {
        if a == C64::new(0.0, 0.0) {
            continue;
        }
        let digits = dims.digits(i);
        let mut target = Vec::with_capacity(n + 1);
        target.extend_from_slice(&digits[..party]);
        target.extend_from_slice(&[0, 0]);
        target.extend_from_slice(&digits[party + 1..]);
        if digits[party] == 0 {
            amps[out_dims.index_of(&target)] += a * cos_r;
            target[party] = 1;
            target[party + 1] = 1;
            amps[out_dims.index_of(&target)] += a * sin_r;
        } else {
            target[party] = 1;
            amps[out_dims.index_of(&target)] += a;
        }
    }
    PureState::from_parts_unchecked(out_dims, amps)
}

fn initial_state(theta: f64) -> Result<PureState> {
    states::generalized_ghz(3, &[theta.cos(), theta.sin()])
}

/// Charlie's mode split: four qubits `(A, B, C₁, C₂)`.
pub fn psi_double_prime(theta: f64, temperature: f64, omega: f64) -> Result<PureState> {
    check_params(theta, temperature, omega)?;
    let (c, s) = mode_transform(temperature, omega)?;
    Ok(split_mode(&initial_state(theta)?, 2, c, s))
}

/// Bob's and Charlie's modes split: five qubits `(A, B₁, B₂, C₁, C₂)`.
pub fn psi_prime(theta: f64, temperature: f64, omega: f64) -> Result<PureState> {
    check_params(theta, temperature, omega)?;
    let (c, s) = mode_transform(temperature, omega)?;
    let once = split_mode(&initial_state(theta)?, 2, c, s);
    Ok(split_mode(&once, 1, c, s))
}

/// Which three modes are kept after tracing out the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccessibleCase {
    /// Bob and Charlie fall in; keep `A, B₁, C₁`.
    AObtainable,
    /// Charlie falls in; keep `A, B, C₁`.
    BObtainable,
    /// Charlie falls in; keep `A, B, C₂` (inside the horizon).
    BUnobtainable,
}

impl AccessibleCase {
    pub const ALL: [AccessibleCase; 3] = [Self::AObtainable, Self::BObtainable, Self::BUnobtainable];

    pub fn name(&self) -> &'static str {
        match self {
            Self::AObtainable => "a",
            Self::BObtainable => "b-obtainable",
            Self::BUnobtainable => "b-unobtainable",
        }
    }

    /// Indices of the kept modes within the split state.
    pub fn kept_parties(&self) -> &'static [usize] {
        match self {
            Self::AObtainable => &[0, 1, 3],
            Self::BObtainable => &[0, 1, 2],
            Self::BUnobtainable => &[0, 1, 3],
        }
    }
}

impl std::str::FromStr for AccessibleCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "a-obtainable" => Ok(Self::AObtainable),
            "b-obtainable" => Ok(Self::BObtainable),
            "b-unobtainable" => Ok(Self::BUnobtainable),
            other => Err(Error::InvalidParameter(format!("unknown case {other:?}"))),
        }
    }
}

/// Reduced three-qubit state on the modes selected by `case`.
pub fn accessible_state(case: AccessibleCase, theta: f64, temperature: f64, omega: f64) -> Result<DensityMatrix> {
    let full = match case {
        AccessibleCase::AObtainable => psi_prime(theta, temperature, omega)?,
        _ => psi_double_prime(theta, temperature, omega)?,
    };
    partial_trace(&full.to_density(), case.kept_parties())
}

/// Generalized GHZ observable matched to the branch structure of `case`.
///
/// The obtainable cases use `cos θ |000⟩ + sin θ |111⟩`. In the
/// unobtainable case the inside mode `C₂` is excited on the `cos θ` branch
/// and empty on the `sin θ` branch, so the observable is
/// `cos θ |001⟩ + sin θ |110⟩`, a local flip of the same state.
pub fn default_observable(case: AccessibleCase, theta: f64) -> Result<PureState> {
    let (c, s) = (theta.cos(), theta.sin());
    let dims = PartyDims::qubits(3)?;
    match case {
        AccessibleCase::BUnobtainable => PureState::from_terms(dims, &[(&[0, 0, 1], c), (&[1, 1, 0], s)]),
        _ => PureState::from_terms(dims, &[(&[0, 0, 0], c), (&[1, 1, 1], s)]),
    }
}

/// `(T, concurrence lower bound)` for each temperature.
pub fn gbc_bound_sweep(
    case: AccessibleCase,
    theta: f64,
    omega: f64,
    temperatures: &[f64],
    observable: &PureState,
) -> Result<Vec<(f64, f64)>> {
    temperatures
        .iter()
        .map(|&t| {
            let rho = accessible_state(case, theta, t, omega)?;
            let report = bound_gbc(&rho, observable, Convention::Multiset, DEFAULT_RANK_EPS)?;
            Ok((t, report.value))
        })
        .collect()
}

/// `points` temperatures spaced evenly in `log T` from `tmin` to `tmax`.
pub fn log_grid(tmin: f64, tmax: f64, points: usize) -> Result<Vec<f64>> {
    if !(tmin > 0.0 && tmax > tmin) {
        return Err(Error::InvalidParameter(format!(
            "temperature range [{tmin}, {tmax}] is not increasing and positive"
        )));
    }
    if points < 2 {
        return Err(Error::InvalidParameter(
            "a temperature grid needs at least 2 points".into(),
        ));
    }
    let (a, b) = (tmin.ln(), tmax.ln());
    Ok((0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::fidelity;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    #[test]
    fn mode_transform_values() {
        let (c, s) = mode_transform(1.0 / 50.0, 1.0).unwrap();
        assert!((c - 1.0).abs() < 1e-9 && s < 1e-9);
        let (c, s) = mode_transform(1.0, 1.0).unwrap();
        assert!((c - ((-1.0f64).exp() + 1.0).powf(-0.5)).abs() < 1e-15);
        assert!((s - (1.0f64.exp() + 1.0).powf(-0.5)).abs() < 1e-15);
        assert!((c * c + s * s - 1.0).abs() < 1e-12);
        assert!(mode_transform(0.0, 1.0).is_err());
        assert!(mode_transform(1.0, -1.0).is_err());
    }

    #[test]
    fn high_temperature_limit() {
        // cos r − 1/√2 ≈ (ω/T)/(4√2) to first order
        let (c, _) = mode_transform(1e4, 1.0).unwrap();
        assert!((c - FRAC_1_SQRT_2 - 1e-4 / (4.0 * 2f64.sqrt())).abs() < 1e-9);
        let (c, s) = mode_transform(1e6, 1.0).unwrap();
        assert!((c - FRAC_1_SQRT_2).abs() < 1e-6 && (s - FRAC_1_SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn double_prime_amplitudes() {
        let (theta, t) = (FRAC_PI_4, 1.0);
        let psi = psi_double_prime(theta, t, 1.0).unwrap();
        let (c, s) = mode_transform(t, 1.0).unwrap();
        let a = psi.amplitudes();
        assert!((a[0b0000].re - theta.cos() * c).abs() < 1e-15);
        assert!((a[0b0011].re - theta.cos() * s).abs() < 1e-15);
        assert!((a[0b1110].re - theta.sin()).abs() < 1e-15);
        assert!((psi.amplitudes().norm() - 1.0).abs() < 1e-12);

        let prod = psi_double_prime(0.0, t, 1.0).unwrap();
        assert!(crate::measures::is_biseparable_pure(&prod, DEFAULT_RANK_EPS)
            .unwrap()
            .is_some());
    }

    #[test]
    fn prime_amplitudes() {
        let (theta, t) = (0.6f64, 1.0);
        let psi = psi_prime(theta, t, 1.0).unwrap();
        let (c, s) = mode_transform(t, 1.0).unwrap();
        let a = psi.amplitudes();
        let ct = theta.cos();
        assert!((a[0b00000].re - ct * c * c).abs() < 1e-15);
        assert!((a[0b01111].re - ct * s * s).abs() < 1e-15);
        assert!((a[0b11010].re - theta.sin()).abs() < 1e-15);
        assert!((a[0b00011].re - ct * c * s).abs() < 1e-15);
        assert!((a[0b01100].re - ct * c * s).abs() < 1e-15);
        let nonzero = a.iter().filter(|x| x.norm() > 0.0).count();
        assert_eq!(nonzero, 5);
        assert!((psi_prime(FRAC_PI_4, 2.0, 1.0).unwrap().amplitudes().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn low_temperature_limits() {
        let theta = FRAC_PI_4;
        let ghz = default_observable(AccessibleCase::BObtainable, theta).unwrap();
        let rho = accessible_state(AccessibleCase::BObtainable, theta, 0.02, 1.0).unwrap();
        assert!((fidelity(&ghz, &rho).unwrap() - 1.0).abs() < 1e-9);

        let prime = psi_prime(theta, 0.02, 1.0).unwrap();
        assert!((prime.amplitudes()[0b11010].re - theta.sin()).abs() < 1e-15);
        assert!((prime.amplitudes()[0].re - theta.cos()).abs() < 1e-9);
    }

    #[test]
    fn accessible_traces() {
        for case in AccessibleCase::ALL {
            let rho = accessible_state(case, 0.5, 1.0, 1.0).unwrap();
            assert_eq!(rho.parties(), 3);
            assert!((rho.trace() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sweep_endpoints() {
        let theta = FRAC_PI_4;
        let grid = [0.02, 100.0];
        let obs = default_observable(AccessibleCase::BObtainable, theta).unwrap();
        let b = gbc_bound_sweep(AccessibleCase::BObtainable, theta, 1.0, &grid, &obs).unwrap();
        assert!((b[0].1 - 1.0).abs() < 1e-3);
        let a = gbc_bound_sweep(AccessibleCase::AObtainable, theta, 1.0, &grid, &obs).unwrap();
        assert!((a[0].1 - 1.0).abs() < 1e-3);
        let obs_u = default_observable(AccessibleCase::BUnobtainable, theta).unwrap();
        let u = gbc_bound_sweep(AccessibleCase::BUnobtainable, theta, 1.0, &grid, &obs_u).unwrap();
        assert!(u[0].1 < 1e-3);
        assert!(u[1].1 > u[0].1);
        // the unshifted GHZ observable never sees the inside mode's correlations
        let u_ghz = gbc_bound_sweep(AccessibleCase::BUnobtainable, theta, 1.0, &grid, &obs).unwrap();
        assert!(u_ghz.iter().all(|x| x.1 == 0.0));
    }

    #[test]
    fn log_grid_shape() {
        let g = log_grid(0.01, 100.0, 5).unwrap();
        assert_eq!(g.len(), 5);
        assert!((g[2] - 1.0).abs() < 1e-12);
        assert!(log_grid(1.0, 0.5, 3).is_err());
        assert!(log_grid(0.1, 1.0, 1).is_err());
    }

    #[test]
    fn case_names_round_trip() {
        for case in AccessibleCase::ALL {
            assert_eq!(case.name().parse::<AccessibleCase>().unwrap(), case);
        }
        assert!("c".parse::<AccessibleCase>().is_err());
    }
}
