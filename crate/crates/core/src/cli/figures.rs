use std::fmt::Write;
use std::path::{Path, PathBuf};

use super::{fmt_num, CliError};
use crate::blackhole::{self, AccessibleCase};
use crate::bounds::{self, detection_threshold, BoundKind, Convention};
use crate::dynamics;
use crate::{states, PureState, Result, DEFAULT_RANK_EPS};

/// Initial angles of the sudden-death figure.
pub const FIG3_ALPHAS: [f64; 5] = [
    std::f64::consts::PI / 8.0,
    std::f64::consts::PI / 6.0,
    std::f64::consts::PI / 4.0,
    std::f64::consts::PI / 3.0,
    3.0 * std::f64::consts::PI / 8.0,
];
const FIG3_GRID: usize = 100;
const FIG5_POINTS: usize = 40;
const FIG5_TMIN: f64 = 0.02;
const FIG5_TMAX: f64 = 100.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdRow {
    pub label: &'static str,
    pub observable: &'static str,
    pub convention: Convention,
    pub threshold: f64,
}

fn concurrence_detects(p: f64, observable: &PureState, convention: Convention) -> Result<bool> {
    let rho = states::noisy_w(p)?;
    let report = bounds::bound(BoundKind::Concurrence, &rho, observable, convention, DEFAULT_RANK_EPS)?;
    Ok(report.detects_gme())
}

/// Mixing weights above which `p|W₃⟩⟨W₃| + (1−p)I/8` is detected:
/// the concurrence bound with the skewed W observable, the same with `W₃`
/// itself, and the point where the second aggregate `Λ⁽²⁾` of the skewed
/// observable leaves its clamp under the distinct convention (equivalently,
/// where its `{0,1}|{2}` cut becomes certified).
pub fn example2_thresholds() -> Result<Vec<ThresholdRow>> {
    let phi = states::skewed_w()?;
    let w = states::w(3)?;
    let phi_multiset = detection_threshold(|p| concurrence_detects(p, &phi, Convention::Multiset), 0.0, 1.0)?;
    let w_multiset = detection_threshold(|p| concurrence_detects(p, &w, Convention::Multiset), 0.0, 1.0)?;
    let phi_second = detection_threshold(
        |p| {
            let rho = states::noisy_w(p)?;
            let report = bounds::bound(
                BoundKind::Concurrence,
                &rho,
                &phi,
                Convention::Distinct,
                DEFAULT_RANK_EPS,
            )?;
            Ok(report.lambda_caps[1] > 1.0)
        },
        0.0,
        1.0,
    )?;
    Ok(vec![
        ThresholdRow {
            label: "bound_positive",
            observable: "example2-phi",
            convention: Convention::Multiset,
            threshold: phi_multiset,
        },
        ThresholdRow {
            label: "bound_positive",
            observable: "w:3",
            convention: Convention::Multiset,
            threshold: w_multiset,
        },
        ThresholdRow {
            label: "bipartition_certificate",
            observable: "example2-phi",
            convention: Convention::Distinct,
            threshold: phi_second,
        },
    ])
}

fn fig3_csv() -> Result<String> {
    let ps = dynamics::unit_grid(FIG3_GRID);
    let mut out = String::from("alpha,p,gmc,thm1_bound\n");
    for alpha in FIG3_ALPHAS {
        let gmc = dynamics::gmc_curve(alpha, &ps)?;
        let bound = dynamics::bound_curve_ghz4(alpha, &ps)?;
        for ((p, g), (_, b)) in gmc.iter().zip(&bound) {
            writeln!(
                out,
                "{},{},{},{}",
                fmt_num(alpha),
                fmt_num(*p),
                fmt_num(*g),
                fmt_num(*b)
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn fig5_csv() -> Result<String> {
    let theta = std::f64::consts::FRAC_PI_4;
    let grid = blackhole::log_grid(FIG5_TMIN, FIG5_TMAX, FIG5_POINTS)?;
    let series = AccessibleCase::ALL
        .iter()
        .map(|&case| {
            let obs = blackhole::default_observable(case, theta)?;
            blackhole::gbc_bound_sweep(case, theta, 1.0, &grid, &obs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("T,a_obtainable,b_obtainable,b_unobtainable\n");
    for (i, t) in grid.iter().enumerate() {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_num(*t),
            fmt_num(series[0][i].1),
            fmt_num(series[1][i].1),
            fmt_num(series[2][i].1)
        )
        .unwrap();
    }
    Ok(out)
}

fn thresholds_csv() -> Result<String> {
    let mut out = String::from("label,observable,convention,threshold\n");
    for row in example2_thresholds()? {
        writeln!(
            out,
            "{},{},{},{}",
            row.label,
            row.observable,
            row.convention.name(),
            fmt_num(row.threshold)
        )
        .unwrap();
    }
    Ok(out)
}

/// Writes the three reproduction CSVs into `outdir` and returns their paths.
pub fn cmd_paper_figures(outdir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(outdir).map_err(|e| CliError::Io(outdir.display().to_string(), e))?;
    let files = [
        ("fig3.csv", fig3_csv()?),
        ("fig5.csv", fig5_csv()?),
        ("example2_thresholds.csv", thresholds_csv()?),
    ];
    let mut written = Vec::new();
    for (name, body) in files {
        let path = outdir.join(name);
        std::fs::write(&path, body).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        written.push(path);
    }
    Ok(written)
}
