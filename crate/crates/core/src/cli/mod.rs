//! Command-line drivers, named states and output formatting.
//!
//! Every subcommand is a plain function returning its output as a string,
//! so the binary in `src/bin/gbem.rs` only parses arguments and prints.

mod commands;
mod figures;
mod statefile;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{cmd_blackhole, cmd_bound, cmd_measure, cmd_sudden_death};
pub use figures::{cmd_paper_figures, example2_thresholds, ThresholdRow};
pub use statefile::{read_state, write_state, AnyState, StateFile, StateKind};

use crate::blackhole::AccessibleCase;
use crate::bounds::{BoundKind, Convention};
use crate::measures::MeasureKind;
use crate::{states, Error, DEFAULT_RANK_EPS};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("malformed state file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

/// Decimal text with at least 12 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    if !x.is_finite() || x.abs() < 1e-30 || x.abs() >= 1e15 {
        return format!("{x:.12e}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = if magnitude < 0 { 12 - magnitude - 1 } else { 12 };
    format!("{x:.prec$}", prec = decimals as usize)
}

/// Parses an angle given in radians or as `pi`, `pi/N`, `M*pi/N`.
pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let t = text.trim().to_ascii_lowercase().replace(' ', "");
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let bad = || CliError::Usage(format!("cannot parse angle {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.to_string(), b.parse::<f64>().map_err(|_| bad())?),
        None => (t.clone(), 1.0),
    };
    let factor = match num.strip_suffix("pi") {
        Some("") => 1.0,
        Some(prefix) => prefix.trim_end_matches('*').parse::<f64>().map_err(|_| bad())?,
        None => return Err(bad()),
    };
    Ok(factor * std::f64::consts::PI / den)
}

/// Resolves a built-in state name or reads a state file.
///
/// Built-ins: `ghz:n[:d]`, `w:n`, `example2-rho:p` (alias `noisy-w:p`),
/// `example2-phi` (alias `skewed-w`).
pub fn resolve_state(spec: &str) -> Result<AnyState, CliError> {
    let mut parts = spec.split(':');
    let head = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    let int = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad integer {s:?} in state name {spec:?}")))
    };
    let real = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| CliError::Usage(format!("bad number {s:?} in state name {spec:?}")))
    };
    match (head, args.as_slice()) {
        ("ghz", [n]) => Ok(AnyState::Pure(states::ghz(int(n)?, 2)?)),
        ("ghz", [n, d]) => Ok(AnyState::Pure(states::ghz(int(n)?, int(d)?)?)),
        ("w", [n]) => Ok(AnyState::Pure(states::w(int(n)?)?)),
        ("example2-rho" | "noisy-w", [p]) => Ok(AnyState::Density(states::noisy_w(real(p)?)?)),
        ("example2-phi" | "skewed-w", []) => Ok(AnyState::Pure(states::skewed_w()?)),
        ("ghz" | "w" | "example2-rho" | "noisy-w" | "example2-phi" | "skewed-w", _) => {
            Err(CliError::Usage(format!("wrong arguments in state name {spec:?}")))
        }
        _ => read_state(std::path::Path::new(spec)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Concurrence,
    Negativity,
    Gconcurrence,
    Geometric,
}

impl KindArg {
    pub fn measure(self) -> MeasureKind {
        self.bound_kind().measure()
    }

    pub fn bound_kind(self) -> BoundKind {
        match self {
            Self::Concurrence => BoundKind::Concurrence,
            Self::Negativity => BoundKind::Negativity,
            Self::Gconcurrence => BoundKind::GConcurrence,
            Self::Geometric => BoundKind::GeometricMeasure,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Multiset,
    Distinct,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Multiset => Convention::Multiset,
            ConventionArg::Distinct => Convention::Distinct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    A,
    BObtainable,
    BUnobtainable,
}

impl From<CaseArg> for AccessibleCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::A => AccessibleCase::AObtainable,
            CaseArg::BObtainable => AccessibleCase::BObtainable,
            CaseArg::BUnobtainable => AccessibleCase::BUnobtainable,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gbem",
    version,
    about = "Geometric-mean GME measures, fidelity bounds and dynamics sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact measure of a pure state with its per-bipartition values.
    Measure {
        /// State file or built-in name (`ghz:n[:d]`, `w:n`, `example2-phi`, ...).
        state: String,
        #[arg(long, value_enum, default_value = "concurrence")]
        kind: KindArg,
        #[arg(long, default_value_t = DEFAULT_RANK_EPS)]
        eps: f64,
    },
    /// Fidelity lower bound of a pure or mixed state.
    Bound {
        state: String,
        /// Observable pure state (file or built-in name).
        #[arg(long)]
        observable: String,
        #[arg(long, value_enum, default_value = "concurrence")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "multiset")]
        convention: ConventionArg,
        #[arg(long, default_value_t = DEFAULT_RANK_EPS)]
        eps: f64,
    },
    /// CSV of p, GMC and concurrence bound for the damped GHZ₄ state.
    SuddenDeath {
        /// Initial angle in radians, or pi/N style.
        #[arg(long, default_value = "pi/4", value_parser = parse_angle_arg)]
        alpha: f64,
        /// Number of grid intervals on [0, 1].
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
    /// CSV of T and concurrence bound for one horizon scenario.
    Blackhole {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long, default_value = "pi/4", value_parser = parse_angle_arg)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 0.02)]
        tmin: f64,
        #[arg(long, default_value_t = 100.0)]
        tmax: f64,
        #[arg(long, default_value_t = 40)]
        points: usize,
        /// Override the case's default observable.
        #[arg(long)]
        observable: Option<String>,
    },
    /// Writes fig3.csv, fig5.csv and example2_thresholds.csv.
    PaperFigures {
        #[arg(long, default_value = ".")]
        outdir: PathBuf,
    },
    /// Prints a built-in state in the state-file format.
    State {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_angle_arg(text: &str) -> Result<f64, String> {
    parse_angle(text).map_err(|e| e.to_string())
}

fn pure_only(state: AnyState, what: &str) -> Result<crate::PureState, CliError> {
    match state {
        AnyState::Pure(p) => Ok(p),
        AnyState::Density(_) => Err(CliError::Usage(format!("{what} must be a pure state"))),
    }
}

/// Runs one parsed command and returns what it prints.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Measure { state, kind, eps } => cmd_measure(&resolve_state(&state)?, &kind.measure(), eps),
        Command::Bound {
            state,
            observable,
            kind,
            convention,
            eps,
        } => {
            let obs = pure_only(resolve_state(&observable)?, "observable")?;
            cmd_bound(&resolve_state(&state)?, &obs, kind.bound_kind(), convention.into(), eps)
        }
        Command::SuddenDeath { alpha, grid } => cmd_sudden_death(alpha, grid),
        Command::Blackhole {
            case,
            theta,
            omega,
            tmin,
            tmax,
            points,
            observable,
        } => {
            let obs = observable
                .map(|o| pure_only(resolve_state(&o)?, "observable"))
                .transpose()?;
            cmd_blackhole(case.into(), theta, omega, tmin, tmax, points, obs.as_ref())
        }
        Command::PaperFigures { outdir } => {
            let written = cmd_paper_figures(&outdir)?;
            Ok(written.iter().map(|p| format!("wrote {}\n", p.display())).collect())
        }
        Command::State { name, out } => {
            let state = resolve_state(&name)?;
            match out {
                Some(path) => {
                    write_state(&path, &state)?;
                    Ok(format!("wrote {}\n", path.display()))
                }
                None => Ok(StateFile::from_state(&state).to_json() + "\n"),
            }
        }
    }
}
