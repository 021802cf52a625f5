//! Brute-force checks at small sizes.
//!
//! Everything here works on explicit `2^N` state vectors and is independent of
//! the channel-product shortcuts in [`spectrum`](crate::spectrum) and
//! [`entropy`](crate::entropy): the dense momentum-qubit state, all `4^N`
//! Pauli expectations, the `4 × 4` channel blocks, and a real-space
//! exact-diagonalization ground state for comparison.

mod channel;
mod dense;
mod pauli;
mod realspace;
mod report;

pub use channel::{channel_hamiltonian, channel_hamiltonian_check, ChannelCheck};
pub use dense::{build_state, build_state_with_order, DenseState, SlotLabel, DENSE_CAP};
pub use pauli::{
    enumerate_all_strings, enumerate_all_strings_with_cap, oracle_renyi, pauli_expectation,
    FullPauliSpectrum, PauliLetter, PauliString, DEFAULT_STRING_CAP, IMAGINARY_TOLERANCE,
};
pub use realspace::{
    apply_hamiltonian, free_fermion_energy, realspace_ground_state, realspace_m2, Parity,
    RealSpaceGroundState, REALSPACE_STRING_CAP,
};
pub use report::{
    classify_string, run_oracle, CheckResult, GroundEnergyCheck, OracleReport, StringClass,
    SupportCounts,
};
