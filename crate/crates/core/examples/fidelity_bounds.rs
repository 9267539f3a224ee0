// Lower bounds from a single fidelity, and the detection thresholds of the
// noisy W family `p|W⟩⟨W| + (1−p)I/8`.

use gbem::bounds::{self, best_bound, BoundKind, Convention};
use gbem::cli::example2_thresholds;
use gbem::measures::MeasureKind;
use gbem::{states, DEFAULT_RANK_EPS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let phi = states::skewed_w()?;
    let w = states::w(3)?;
    let rho = states::noisy_w(0.9)?;

    for kind in BoundKind::ALL {
        let r = bounds::bound(kind, &rho, &w, Convention::Multiset, DEFAULT_RANK_EPS)?;
        println!("p=0.9 {:<12} F={:.6} bound={:.6}", kind.name(), r.fidelity, r.value);
    }

    let best = best_bound(
        &rho,
        &[phi.clone(), w.clone()],
        &MeasureKind::Concurrence,
        Convention::Multiset,
        DEFAULT_RANK_EPS,
    )?;
    println!(
        "best observable index {} bound {:.6}",
        best.observable, best.report.value
    );

    let half = states::noisy_w(0.5)?;
    for cert in bounds::certify_bipartitions(&half, &phi, DEFAULT_RANK_EPS)? {
        println!(
            "p=0.5 {} certified={} concurrence>={:.6}",
            cert.bipartition, cert.certified, cert.lower_bounds[0]
        );
    }

    for row in example2_thresholds()? {
        println!(
            "{} {} {}: p > {:.6}",
            row.label,
            row.observable,
            row.convention.name(),
            row.threshold
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
