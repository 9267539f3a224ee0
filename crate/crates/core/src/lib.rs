//! Genuine multipartite entanglement measures built as geometric means of
//! bipartite entanglement over every bipartition of a multi-qudit state.
//!
//! The crate covers four layers:
//!
//! - [`hilbert`]: pure states, density matrices, partial traces, Schmidt
//!   spectra and the small dense Hermitian eigenvalue kernel.
//! - [`bipartition`] and [`measures`]: enumeration of bipartitions modulo
//!   complement and the geometric-mean measures (concurrence, negativity,
//!   G-concurrence, geometric measure, or a user supplied spectral function).
//! - [`bounds`]: fidelity-based lower bounds that only need the overlap
//!   `⟨ψ|ρ|ψ⟩` with an observable pure state, plus per-bipartition
//!   certificates.
//! - [`dynamics`] and [`blackhole`]: the amplitude-exchange sudden-death
//!   study and the Hawking-radiation degradation study.
//!
//! The [`cli`] module holds the state file format, CSV output and the
//! subcommand drivers used by the `gbem` binary.
//!
//! ```
//! use gbem::{measures::{gbem, MeasureKind}, states, DEFAULT_RANK_EPS};
//!
//! let ghz = states::ghz(3, 2).unwrap();
//! let result = gbem(&ghz, &MeasureKind::Concurrence, DEFAULT_RANK_EPS).unwrap();
//! assert!((result.value - 1.0).abs() < 1e-12);
//! ```

pub mod bipartition;
pub mod blackhole;
pub mod bounds;
pub mod cli;
pub mod dynamics;
mod error;
pub mod hilbert;
pub mod measures;
pub mod states;

pub use bipartition::{Bipartition, BipartitionSet};
pub use error::{Error, Result};
pub use hilbert::{DensityMatrix, PartyDims, PureState, SchmidtSpectrum, C64};

/// Default tolerance below which a Schmidt probability counts as vanishing.
pub const DEFAULT_RANK_EPS: f64 = 1e-10;
