// Bipartitions modulo complement.

use gbem::bipartition::{count, enumerate};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=6 {
        let set = enumerate(n)?;
        println!("n={n}: {} cuts (formula {})", set.len(), count(n)?);
    }
    for cut in &enumerate(4)? {
        println!("  {cut}  complement {:?}", cut.complement());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
