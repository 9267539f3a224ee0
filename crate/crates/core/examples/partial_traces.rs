// Reduced states, Schmidt spectra, partial transposes and local channels.

use gbem::dynamics::damping_channel_kraus;
use gbem::hilbert::{apply_local_channel, partial_trace, partial_transpose, schmidt_spectrum, trace_norm};
use gbem::{states, Bipartition, DEFAULT_RANK_EPS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = states::w(3)?;
    let cut = Bipartition::new(3, &[0])?;
    let spectrum = schmidt_spectrum(&w, &cut, DEFAULT_RANK_EPS)?;
    println!(
        "W3 across {cut}: {:?} rank {}",
        spectrum.probabilities(),
        spectrum.rank()
    );

    let pair = partial_trace(&w.to_density(), &[0, 1])?;
    println!("pair purity {:.6}", pair.purity());
    let pt = partial_transpose(&pair, &[0])?;
    println!("pair negativity {:.6}", (trace_norm(&pt)? - 1.0) / 2.0);

    let bell = states::ghz(2, 2)?.to_density();
    let kraus = damping_channel_kraus(0.5)?;
    let damped = apply_local_channel(&bell, 1, &kraus)?;
    println!("damped bell trace {:.6} purity {:.6}", damped.trace(), damped.purity());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
