// Concurrence bound of the accessible modes of a GHZ state as the Hawking
// temperature grows.

use gbem::blackhole::{self, AccessibleCase};
use std::f64::consts::FRAC_PI_4;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (cos_r, sin_r) = blackhole::mode_transform(1.0, 1.0)?;
    println!("T=omega: cos r={cos_r:.6} sin r={sin_r:.6}");

    let temps = blackhole::log_grid(0.02, 100.0, 8)?;
    for case in AccessibleCase::ALL {
        let obs = blackhole::default_observable(case, FRAC_PI_4)?;
        let series = blackhole::gbc_bound_sweep(case, FRAC_PI_4, 1.0, &temps, &obs)?;
        println!("{}", case.name());
        for (t, b) in series {
            println!("  T={t:>10.4}  bound={b:.6}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
