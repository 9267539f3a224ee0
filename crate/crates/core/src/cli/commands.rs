use std::fmt::Write;

use super::{fmt_num, AnyState, CliError};
use crate::blackhole::{self, AccessibleCase};
use crate::bounds::{self, BoundKind, Convention};
use crate::dynamics::{self, SuddenDeath};
use crate::measures::{gbem, is_biseparable_pure, MeasureKind};
use crate::PureState;

pub fn cmd_measure(state: &AnyState, kind: &MeasureKind, eps: f64) -> Result<String, CliError> {
    let psi = match state {
        AnyState::Pure(p) => p,
        AnyState::Density(_) => {
            return Err(CliError::Usage("convex roof not implemented; use bound".into()));
        }
    };
    let result = gbem(psi, kind, eps)?;
    let mut out = String::new();
    writeln!(out, "kind: {}", kind.name()).unwrap();
    writeln!(out, "gbem: {}", fmt_num(result.value)).unwrap();
    writeln!(out, "bipartition,value").unwrap();
    for (g, v) in &result.per_bipartition {
        writeln!(out, "{g},{}", fmt_num(*v)).unwrap();
    }
    if let Some(g) = is_biseparable_pure(psi, eps)? {
        writeln!(out, "biseparable across: {g}").unwrap();
    }
    Ok(out)
}

pub fn cmd_bound(
    state: &AnyState,
    observable: &PureState,
    kind: BoundKind,
    convention: Convention,
    eps: f64,
) -> Result<String, CliError> {
    let report = bounds::bound(kind, &state.to_density(), observable, convention, eps)?;
    let mut out = String::new();
    writeln!(out, "kind: {}", kind.name()).unwrap();
    writeln!(out, "convention: {}", convention.name()).unwrap();
    writeln!(out, "fidelity: {}", fmt_num(report.fidelity)).unwrap();
    let pair = |a: f64, b: f64| format!("{}, {}", fmt_num(a), fmt_num(b));
    writeln!(
        out,
        "lambda0: {}",
        pair(report.profile.lambda0[0], report.profile.lambda0[1])
    )
    .unwrap();
    writeln!(out, "rank: {}, {}", report.profile.rank[0], report.profile.rank[1]).unwrap();
    writeln!(out, "dmin: {}, {}", report.profile.dmin[0], report.profile.dmin[1]).unwrap();
    writeln!(
        out,
        "lambda_caps: {}",
        pair(report.lambda_caps[0], report.lambda_caps[1])
    )
    .unwrap();
    writeln!(out, "bound: {}", fmt_num(report.value)).unwrap();
    writeln!(
        out,
        "bipartition,lambda0,certified,concurrence,negativity,gconcurrence,geometric"
    )
    .unwrap();
    for c in &report.certificates {
        let lbs: Vec<String> = c.lower_bounds.iter().map(|&x| fmt_num(x)).collect();
        writeln!(
            out,
            "{},{},{},{}",
            c.bipartition,
            fmt_num(c.lambda0),
            c.certified,
            lbs.join(",")
        )
        .unwrap();
    }
    for w in &report.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    Ok(out)
}

/// CSV `p,gmc,thm1_bound` on `grid + 1` evenly spaced points, followed by a
/// `#` footer with the sudden-death point.
pub fn cmd_sudden_death(alpha: f64, grid: usize) -> Result<String, CliError> {
    if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2) {
        return Err(CliError::Usage(format!("alpha {alpha} must lie in (0, π/2)")));
    }
    let ps = dynamics::unit_grid(grid);
    let gmc = dynamics::gmc_curve(alpha, &ps)?;
    let bound = dynamics::bound_curve_ghz4(alpha, &ps)?;
    let mut out = String::from("p,gmc,thm1_bound\n");
    for ((p, g), (_, b)) in gmc.iter().zip(&bound) {
        writeln!(out, "{},{},{}", fmt_num(*p), fmt_num(*g), fmt_num(*b)).unwrap();
    }
    match dynamics::sudden_death_threshold(alpha)? {
        SuddenDeath::At(p) => writeln!(out, "# p_star,{}", fmt_num(p)).unwrap(),
        SuddenDeath::Never => writeln!(out, "# no sudden death").unwrap(),
        SuddenDeath::NoEntanglement => writeln!(out, "# no entanglement").unwrap(),
    }
    Ok(out)
}

/// CSV `T,gbc_bound` on a logarithmic temperature grid.
pub fn cmd_blackhole(
    case: AccessibleCase,
    theta: f64,
    omega: f64,
    tmin: f64,
    tmax: f64,
    points: usize,
    observable: Option<&PureState>,
) -> Result<String, CliError> {
    let grid = blackhole::log_grid(tmin, tmax, points)?;
    let default = blackhole::default_observable(case, theta)?;
    let obs = observable.unwrap_or(&default);
    let series = blackhole::gbc_bound_sweep(case, theta, omega, &grid, obs)?;
    let mut out = String::from("T,gbc_bound\n");
    for (t, b) in series {
        writeln!(out, "{},{}", fmt_num(t), fmt_num(b)).unwrap();
    }
    Ok(out)
}
