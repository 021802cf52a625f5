//! Momentum-space nonstabilizerness of the transverse-field Ising chain.
//!
//! The ground state of the periodic chain factorizes into independent
//! `(−k, k)` momentum channels once the fermionic modes are mapped back onto
//! qubits. Every quantity in this crate is built from the per-channel
//! Bogoliubov angle θ_k:
//!
//! * [`model`]: momentum grid, dispersion, angles and channel amplitudes.
//! * [`spectrum`]: Pauli-string magnitudes, their distribution (exact
//!   enumeration, binned log-domain convolution, seeded sampling), string
//!   counts, the magic gap and tail fits.
//! * [`entropy`]: closed-form stabilizer Rényi entropies, the thermodynamic
//!   density, and one-sided derivatives at the critical point.
//! * [`oracle`]: brute-force dense-state checks at small sizes, including a
//!   real-space exact-diagonalization comparison.
//!
//! ```
//! use tfim_magic::{entropy, model::ModelParams};
//!
//! let params = ModelParams::new(2, 1.0).unwrap();
//! let m2 = entropy::magic_m2(&params);
//! assert!((m2.value - (4.0f64 / 3.0).ln()).abs() < 1e-12);
//! ```

pub mod entropy;
pub mod error;
pub mod format;
pub mod model;
pub mod oracle;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::ModelParams;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/momentum-qubits.md")]
    mod momentum_qubits {}
    #[doc = include_str!("../../../book/src/pauli-spectrum.md")]
    mod pauli_spectrum {}
    #[doc = include_str!("../../../book/src/magic-gap.md")]
    mod magic_gap {}
    #[doc = include_str!("../../../book/src/stabilizer-entropies.md")]
    mod stabilizer_entropies {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
