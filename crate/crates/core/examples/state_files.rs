// Writing and reading the JSON state format.

use gbem::cli::{read_state, write_state, AnyState, StateFile};
use gbem::states;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("gbem-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;

    let psi = AnyState::Pure(states::skewed_w()?);
    let rho = AnyState::Density(states::noisy_w(0.25)?);
    for (name, state) in [("phi.json", &psi), ("rho.json", &rho)] {
        let path = dir.join(name);
        write_state(&path, state)?;
        let back = read_state(&path)?;
        println!(
            "{name}: dims {:?}, round trip exact: {}",
            back.dims().as_slice(),
            &back == state
        );
    }
    println!(
        "{}",
        StateFile::from_state(&AnyState::Pure(states::ghz(2, 2)?)).to_json()
    );

    let broken = r#"{"dims":[2],"kind":"pure","data":[[1,0],[1,0]]}"#;
    match StateFile::parse(broken)?.into_state() {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
