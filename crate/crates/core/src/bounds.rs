//! Fidelity-based lower bounds on the geometric-mean measures.
//!
//! Given a target state `ρ` and an observable pure state `|ψ⟩`, only the
//! overlap `F = ⟨ψ|ρ|ψ⟩` has to be measured. The Schmidt profile of `ψ`
//! supplies, per bipartition, the largest Schmidt probability `λ₀`, the
//! Schmidt rank `m` and the smaller side's dimension `d`. The extremes of
//! these over all bipartitions (largest and second largest) enter capped
//! ratios `Λ = max{1, F/λ₀}`, and each measure turns `(Λ, m, d)` into a
//! factor:
//!
//! | measure      | factor                                               |
//! |--------------|------------------------------------------------------|
//! | concurrence  | `√(d / ((d−1) m (m−1))) · (Λ − 1)`                   |
//! | negativity   | `Λ − 1`                                              |
//! | G-concurrence| `max{0, 1 − m + Λ}`                                  |
//! | geometric    | `1 − (√Λ + √((m−1)(m−Λ)))² / m²`                     |
//!
//! The bound is `[X₁ · X₂^(c−1)]^(1/c)` with `c` the bipartition count.

use crate::bipartition::{self, Bipartition};
use crate::hilbert::{check_eps, fidelity, schmidt_spectrum, DensityMatrix, PureState};
use crate::measures::MeasureKind;
use crate::{Error, Result};

/// How the "second largest" aggregate is read when values tie at the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// Second entry of the nonincreasing list, counting ties.
    #[default]
    Multiset,
    /// Largest value strictly below the maximum; falls back to the maximum
    /// when every value is equal. Not sound in general.
    Distinct,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Multiset => "multiset",
            Self::Distinct => "distinct",
        }
    }
}

/// The four measures that have a fidelity bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Concurrence,
    Negativity,
    GConcurrence,
    GeometricMeasure,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::Concurrence,
        BoundKind::Negativity,
        BoundKind::GConcurrence,
        BoundKind::GeometricMeasure,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Concurrence => "concurrence",
            Self::Negativity => "negativity",
            Self::GConcurrence => "gconcurrence",
            Self::GeometricMeasure => "geometric",
        }
    }

    pub fn measure(&self) -> MeasureKind {
        match self {
            Self::Concurrence => MeasureKind::Concurrence,
            Self::Negativity => MeasureKind::Negativity,
            Self::GConcurrence => MeasureKind::GConcurrence,
            Self::GeometricMeasure => MeasureKind::GeometricMeasure,
        }
    }

    /// Per-aggregate factor from the capped ratio, rank and dimension.
    pub fn factor(&self, lambda_cap: f64, rank: usize, dmin: usize) -> f64 {
        let m = rank as f64;
        let d = dmin as f64;
        if rank < 2 {
            return 0.0;
        }
        match self {
            Self::Concurrence => (d / ((d - 1.0) * m * (m - 1.0))).sqrt() * (lambda_cap - 1.0),
            Self::Negativity => lambda_cap - 1.0,
            Self::GConcurrence => (1.0 - m + lambda_cap).max(0.0),
            Self::GeometricMeasure => {
                let mut gap = (m - lambda_cap).max(0.0);
                if gap <= 16.0 * f64::EPSILON * m {
                    gap = 0.0;
                }
                let inner = (m - 1.0) * gap;
                let overlap = lambda_cap.sqrt() + inner.sqrt();
                (1.0 - overlap * overlap / (m * m)).max(0.0)
            }
        }
    }
}

impl TryFrom<&MeasureKind> for BoundKind {
    type Error = Error;

    fn try_from(kind: &MeasureKind) -> Result<Self> {
        match kind {
            MeasureKind::Concurrence => Ok(Self::Concurrence),
            MeasureKind::Negativity => Ok(Self::Negativity),
            MeasureKind::GConcurrence => Ok(Self::GConcurrence),
            MeasureKind::GeometricMeasure => Ok(Self::GeometricMeasure),
            MeasureKind::Custom(_) => Err(Error::NoBoundForCustom),
        }
    }
}

/// Schmidt data of the observable across one bipartition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutProfile {
    pub bipartition: Bipartition,
    pub lambda0: f64,
    pub rank: usize,
    pub dmin: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObservableProfile {
    pub per_bipartition: Vec<CutProfile>,
    /// Largest and second-largest `λ₀`.
    pub lambda0: [f64; 2],
    /// Largest and second-largest Schmidt rank.
    pub rank: [usize; 2],
    /// Largest and second-largest smaller-side dimension.
    pub dmin: [usize; 2],
    pub convention: Convention,
}

fn top_two<T: Copy + PartialOrd>(values: &[T], convention: Convention) -> [T; 2] {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("finite aggregates"));
    let first = sorted[0];
    let second = match convention {
        Convention::Multiset => *sorted.get(1).unwrap_or(&first),
        Convention::Distinct => sorted.iter().copied().find(|&v| v < first).unwrap_or(first),
    };
    [first, second]
}

pub fn profile(observable: &PureState, convention: Convention, eps: f64) -> Result<ObservableProfile> {
    check_eps(eps)?;
    let set = bipartition::enumerate(observable.parties())?;
    let per_bipartition = set
        .iter()
        .map(|g| {
            let s = schmidt_spectrum(observable, g, eps)?;
            Ok(CutProfile {
                bipartition: *g,
                lambda0: s.largest(),
                rank: s.rank(),
                dmin: s.dmin(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let lambdas: Vec<f64> = per_bipartition.iter().map(|c| c.lambda0).collect();
    let ranks: Vec<usize> = per_bipartition.iter().map(|c| c.rank).collect();
    let dmins: Vec<usize> = per_bipartition.iter().map(|c| c.dmin).collect();
    Ok(ObservableProfile {
        lambda0: top_two(&lambdas, convention),
        rank: top_two(&ranks, convention),
        dmin: top_two(&dmins, convention),
        per_bipartition,
        convention,
    })
}

/// `max{1, F/λ₀}`.
pub fn lambda_cap(fidelity: f64, lambda0: f64) -> Result<f64> {
    if !(lambda0 > 0.0 && lambda0 <= 1.0 + 1e-12) {
        return Err(Error::InvalidParameter(format!(
            "largest Schmidt probability {lambda0} outside (0, 1]"
        )));
    }
    Ok((fidelity / lambda0).max(1.0))
}

/// Per-bipartition certificate: the cut is certified entangled in every
/// pure component when `F > λ₀^γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub bipartition: Bipartition,
    pub lambda0: f64,
    pub certified: bool,
    /// Lower bounds on the bipartite concurrence, negativity, G-concurrence
    /// and geometric measure across this cut, in [`BoundKind::ALL`] order.
    pub lower_bounds: [f64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub fidelity: f64,
    pub value: f64,
    /// `Λ⁽¹⁾, Λ⁽²⁾`.
    pub lambda_caps: [f64; 2],
    /// The two aggregate factors before the geometric mean.
    pub factors: [f64; 2],
    pub profile: ObservableProfile,
    pub certificates: Vec<Certificate>,
    pub warnings: Vec<String>,
}

impl BoundReport {
    /// Whether the bound alone certifies genuine multipartite entanglement.
    pub fn detects_gme(&self) -> bool {
        self.value > 0.0
    }
}

fn combine(first: f64, second: f64, c: usize) -> f64 {
    if first <= 0.0 {
        return 0.0;
    }
    if c == 1 {
        return first;
    }
    if second <= 0.0 {
        return 0.0;
    }
    let c = c as f64;
    ((first.ln() + (c - 1.0) * second.ln()) / c).exp()
}

fn certificates(fid: f64, profile: &ObservableProfile) -> Result<Vec<Certificate>> {
    profile
        .per_bipartition
        .iter()
        .map(|cut| {
            let cap = lambda_cap(fid, cut.lambda0)?;
            let mut lower_bounds = [0.0; 4];
            for (slot, kind) in lower_bounds.iter_mut().zip(BoundKind::ALL) {
                *slot = kind.factor(cap, cut.rank, cut.dmin);
            }
            Ok(Certificate {
                bipartition: cut.bipartition,
                lambda0: cut.lambda0,
                certified: fid > cut.lambda0,
                lower_bounds,
            })
        })
        .collect()
}

/// Lower bound for any of the four measures from an already measured
/// fidelity and the observable's profile.
pub fn bound_from_fidelity(kind: BoundKind, fid: f64, profile: &ObservableProfile) -> Result<BoundReport> {
    let caps = [
        lambda_cap(fid, profile.lambda0[0])?,
        lambda_cap(fid, profile.lambda0[1])?,
    ];
    let factors = [
        kind.factor(caps[0], profile.rank[0], profile.dmin[0]),
        kind.factor(caps[1], profile.rank[1], profile.dmin[1]),
    ];
    let mut warnings = Vec::new();
    if profile.rank[1] <= 1 {
        warnings.push(format!(
            "observable is product across some bipartition (rank aggregates {:?}); it certifies nothing",
            profile.rank
        ));
    }
    let c = profile.per_bipartition.len();
    Ok(BoundReport {
        kind,
        fidelity: fid,
        value: combine(factors[0], factors[1], c),
        lambda_caps: caps,
        factors,
        profile: profile.clone(),
        certificates: certificates(fid, profile)?,
        warnings,
    })
}

pub fn bound(
    kind: BoundKind,
    rho: &DensityMatrix,
    observable: &PureState,
    convention: Convention,
    eps: f64,
) -> Result<BoundReport> {
    let fid = fidelity(observable, rho)?;
    let prof = profile(observable, convention, eps)?;
    bound_from_fidelity(kind, fid, &prof)
}

/// Concurrence bound `[A⁽¹⁾ (A⁽²⁾)^(c−1)]^(1/c)`.
pub fn bound_gbc(rho: &DensityMatrix, observable: &PureState, convention: Convention, eps: f64) -> Result<BoundReport> {
    bound(BoundKind::Concurrence, rho, observable, convention, eps)
}

/// Negativity bound with `B = Λ − 1`.
pub fn bound_gbn(rho: &DensityMatrix, observable: &PureState, convention: Convention, eps: f64) -> Result<BoundReport> {
    bound(BoundKind::Negativity, rho, observable, convention, eps)
}

/// G-concurrence bound with `C = max{0, 1 − m + Λ}`.
pub fn bound_ggc(rho: &DensityMatrix, observable: &PureState, convention: Convention, eps: f64) -> Result<BoundReport> {
    bound(BoundKind::GConcurrence, rho, observable, convention, eps)
}

/// Geometric-measure bound.
pub fn bound_ggm(rho: &DensityMatrix, observable: &PureState, convention: Convention, eps: f64) -> Result<BoundReport> {
    bound(BoundKind::GeometricMeasure, rho, observable, convention, eps)
}

/// Per-bipartition certificates for `rho` against `observable`.
pub fn certify_bipartitions(rho: &DensityMatrix, observable: &PureState, eps: f64) -> Result<Vec<Certificate>> {
    let fid = fidelity(observable, rho)?;
    let prof = profile(observable, Convention::Multiset, eps)?;
    certificates(fid, &prof)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BestBound {
    pub report: BoundReport,
    /// Index of the winning candidate.
    pub observable: usize,
}

/// Largest bound over a candidate set of observables; ties keep the
/// earliest candidate.
pub fn best_bound(
    rho: &DensityMatrix,
    observables: &[PureState],
    kind: &MeasureKind,
    convention: Convention,
    eps: f64,
) -> Result<BestBound> {
    let kind = BoundKind::try_from(kind)?;
    let mut best: Option<BestBound> = None;
    for (i, obs) in observables.iter().enumerate() {
        let report = bound(kind, rho, obs, convention, eps)?;
        if best.as_ref().is_none_or(|b| report.value > b.report.value) {
            best = Some(BestBound { report, observable: i });
        }
    }
    best.ok_or(Error::EmptyCandidates)
}

/// Smallest parameter in `[lo, hi]` above which `detect` holds, located by
/// bisection. `detect` must be false at `lo`, true at `hi`, and switch once.
pub fn detection_threshold<F>(mut detect: F, lo: f64, hi: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<bool>,
{
    if detect(lo)? || !detect(hi)? {
        return Err(Error::InvalidParameter(format!(
            "detection does not switch on between {lo} and {hi}"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if detect(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states;
    use crate::DEFAULT_RANK_EPS as EPS;

    #[test]
    fn ghz_profile() {
        for n in 3..=5 {
            let p = profile(&states::ghz(n, 2).unwrap(), Convention::Multiset, EPS).unwrap();
            assert!((p.lambda0[0] - 0.5).abs() < 1e-12 && (p.lambda0[1] - 0.5).abs() < 1e-12);
            assert_eq!(p.rank, [2, 2]);
            // the largest cut of n qubits has 2^⌊n/2⌋ on its smaller side
            assert_eq!(p.dmin[0], 1 << (n / 2));
        }
        let p = profile(&states::ghz(3, 2).unwrap(), Convention::Multiset, EPS).unwrap();
        assert_eq!(p.dmin, [2, 2]);
    }

    #[test]
    fn skewed_w_profile_conventions() {
        let phi = states::skewed_w().unwrap();
        let distinct = profile(&phi, Convention::Distinct, EPS).unwrap();
        assert!((distinct.lambda0[0] - 0.75).abs() < 1e-12);
        assert!((distinct.lambda0[1] - 0.5).abs() < 1e-12);
        let multiset = profile(&phi, Convention::Multiset, EPS).unwrap();
        assert!((multiset.lambda0[0] - 0.75).abs() < 1e-12);
        assert!((multiset.lambda0[1] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn two_party_profile_repeats_first() {
        let p = profile(&states::ghz(2, 3).unwrap(), Convention::Distinct, EPS).unwrap();
        assert_eq!(p.lambda0[0], p.lambda0[1]);
        assert_eq!(p.rank, [3, 3]);
    }

    #[test]
    fn lambda_cap_examples() {
        assert_eq!(lambda_cap(1.0, 0.5).unwrap(), 2.0);
        assert_eq!(lambda_cap(0.3, 0.5).unwrap(), 1.0);
        assert_eq!(lambda_cap(0.625 + 0.125, 0.75).unwrap(), 1.0);
        assert!(lambda_cap(0.5, 0.0).is_err());
    }

    #[test]
    fn ghz3_self_bounds_are_exact() {
        let ghz = states::ghz(3, 2).unwrap();
        let rho = ghz.to_density();
        let expect = [1.0, 1.0, 1.0, 0.5];
        for (kind, want) in BoundKind::ALL.iter().zip(expect) {
            let r = bound(*kind, &rho, &ghz, Convention::Multiset, EPS).unwrap();
            assert!((r.value - want).abs() < 1e-12, "{}: {}", kind.name(), r.value);
        }
    }

    #[test]
    fn generalized_ghz_concurrence_bound() {
        let (c0, c1) = (0.6, 0.8);
        let rho = states::generalized_ghz(3, &[c0, c1]).unwrap().to_density();
        let r = bound_gbc(&rho, &states::ghz(3, 2).unwrap(), Convention::Multiset, EPS).unwrap();
        assert!((r.value - 2.0 * c0 * c1).abs() < 1e-12);
    }

    #[test]
    fn clamped_fidelity_gives_zero() {
        let rho = states::noisy_w(0.2).unwrap();
        let obs = states::ghz(3, 2).unwrap();
        for kind in BoundKind::ALL {
            let r = bound(kind, &rho, &obs, Convention::Multiset, EPS).unwrap();
            assert_eq!(r.value, 0.0);
        }
    }

    #[test]
    fn w3_self_negativity_bound() {
        let w = states::w(3).unwrap();
        let r = bound_gbn(&w.to_density(), &w, Convention::Multiset, EPS).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn geometric_factor_limits() {
        let k = BoundKind::GeometricMeasure;
        assert!(k.factor(1.0, 2, 2).abs() < 1e-15);
        assert_eq!(BoundKind::GConcurrence.factor(1.0, 1, 2), 0.0);
        assert!(k.factor(1.0, 3, 3).abs() < 1e-15);
        assert!((k.factor(2.0, 2, 2) - 0.5).abs() < 1e-15);
        assert!((k.factor(3.0, 3, 3) - 2.0 / 3.0).abs() < 1e-15);
        // Λ beyond m is clamped
        assert!((k.factor(3.0 + 1e-12, 3, 3) - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn gconcurrence_factor_boundary() {
        assert_eq!(BoundKind::GConcurrence.factor(1.0, 2, 2), 0.0);
        assert_eq!(BoundKind::GConcurrence.factor(1.0, 3, 3), 0.0);
    }

    #[test]
    fn product_observable_warns() {
        let zero = PureState::basis(crate::PartyDims::qubits(3).unwrap(), 0).unwrap();
        let r = bound_gbc(&zero.to_density(), &zero, Convention::Multiset, EPS).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn certificates_for_pure_self_observable() {
        let w = states::w(3).unwrap();
        let certs = certify_bipartitions(&w.to_density(), &w, EPS).unwrap();
        assert!(certs.iter().all(|c| c.certified));
    }

    #[test]
    fn best_bound_selection() {
        let ghz = states::ghz(3, 2).unwrap();
        let w = states::w(3).unwrap();
        let rho = ghz.to_density();
        let best = best_bound(
            &rho,
            &[w.clone(), ghz.clone()],
            &MeasureKind::Concurrence,
            Convention::Multiset,
            EPS,
        )
        .unwrap();
        assert_eq!(best.observable, 1);
        assert!((best.report.value - 1.0).abs() < 1e-12);

        let single = best_bound(
            &rho,
            std::slice::from_ref(&w),
            &MeasureKind::Negativity,
            Convention::Multiset,
            EPS,
        )
        .unwrap();
        let direct = bound_gbn(&rho, &w, Convention::Multiset, EPS).unwrap();
        assert_eq!(single.report, direct);

        assert_eq!(
            best_bound(&rho, &[], &MeasureKind::Concurrence, Convention::Multiset, EPS).unwrap_err(),
            Error::EmptyCandidates
        );
        let custom =
            crate::measures::CustomMeasure::new("gm", |p: &[f64]| 1.0 - p.iter().copied().fold(0.0, f64::max)).unwrap();
        assert_eq!(
            best_bound(&rho, &[w], &MeasureKind::Custom(custom), Convention::Multiset, EPS).unwrap_err(),
            Error::NoBoundForCustom
        );
    }

    #[test]
    fn best_bound_on_noisy_w_takes_maximum() {
        let rho = states::noisy_w(0.9).unwrap();
        let w = states::w(3).unwrap();
        let phi = states::skewed_w().unwrap();
        let a = bound_gbc(&rho, &w, Convention::Multiset, EPS).unwrap().value;
        let b = bound_gbc(&rho, &phi, Convention::Multiset, EPS).unwrap().value;
        let best = best_bound(&rho, &[w, phi], &MeasureKind::Concurrence, Convention::Multiset, EPS).unwrap();
        assert_eq!(best.report.value, a.max(b));
    }

    #[test]
    fn threshold_bisection() {
        let t = detection_threshold(|x| Ok(x > 0.3), 0.0, 1.0).unwrap();
        assert!((t - 0.3).abs() < 1e-14);
        assert!(detection_threshold(|_| Ok(true), 0.0, 1.0).is_err());
    }
}
