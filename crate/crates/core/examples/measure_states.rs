// Exact geometric-mean measures of a few standard pure states.

use gbem::measures::{gbem, is_biseparable_pure, MeasureKind};
use gbem::{states, PartyDims, PureState, DEFAULT_RANK_EPS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let product = PureState::basis(PartyDims::qubits(3)?, 0)?;
    let named = [
        ("ghz3", states::ghz(3, 2)?),
        ("ghz3 qutrit", states::ghz(3, 3)?),
        ("ghz4", states::ghz(4, 2)?),
        ("w3", states::w(3)?),
        ("|000>", product),
    ];
    let kinds = [
        MeasureKind::Concurrence,
        MeasureKind::Negativity,
        MeasureKind::GConcurrence,
        MeasureKind::GeometricMeasure,
    ];
    for (label, psi) in &named {
        print!("{label:>12}");
        for kind in &kinds {
            let r = gbem(psi, kind, DEFAULT_RANK_EPS)?;
            print!("  {}={:.6}", kind.name(), r.value);
        }
        println!();
        if let Some(cut) = is_biseparable_pure(psi, DEFAULT_RANK_EPS)? {
            println!("{:>12}  product across {cut}", "");
        }
    }

    let w = gbem(&named[3].1, &MeasureKind::Concurrence, DEFAULT_RANK_EPS)?;
    for (cut, value) in &w.per_bipartition {
        println!("w3 {cut}: {value:.6}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
