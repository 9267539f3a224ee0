// A user supplied spectral function plugged into the geometric mean.

use gbem::measures::{gbem, CustomMeasure, MeasureKind};
use gbem::{states, DEFAULT_RANK_EPS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let linear_entropy = CustomMeasure::new("linear-entropy", |p: &[f64]| 1.0 - p.iter().map(|x| x * x).sum::<f64>())?;
    let kind = MeasureKind::Custom(linear_entropy);
    for (label, psi) in [("ghz3", states::ghz(3, 2)?), ("w3", states::w(3)?)] {
        let r = gbem(&psi, &kind, DEFAULT_RANK_EPS)?;
        println!("{label}: {} = {:.6}", kind.name(), r.value);
    }

    match CustomMeasure::new("purity", |p: &[f64]| p.iter().map(|x| x * x).sum::<f64>()) {
        Ok(_) => println!("purity accepted"),
        Err(e) => println!("purity rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
