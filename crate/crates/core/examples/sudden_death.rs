// GHZ₄ under independent amplitude exchange with local environments:
// GMC from the X-state formula, the fidelity bound, and the death point.

use gbem::dynamics::{self, SuddenDeath};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let grid = dynamics::unit_grid(10);
    let alpha = PI / 4.0;
    let gmc = dynamics::gmc_curve(alpha, &grid)?;
    let bound = dynamics::bound_curve_ghz4(alpha, &grid)?;
    println!("p      gmc       bound");
    for ((p, g), (_, b)) in gmc.iter().zip(&bound) {
        println!("{p:.2}  {g:.6}  {b:.6}");
    }

    for alpha in [PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, (1.0f64 / 7.0).atan(), 0.05] {
        match dynamics::sudden_death_threshold(alpha)? {
            SuddenDeath::At(p) => println!("alpha={alpha:.4}: dies at p*={p:.6}"),
            SuddenDeath::Never => println!("alpha={alpha:.4}: no sudden death"),
            SuddenDeath::NoEntanglement => println!("alpha={alpha:.4}: product state"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
