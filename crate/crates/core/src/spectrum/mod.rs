//! Momentum-space Pauli spectrum of the ground state.
//!
//! Only magnitudes are tracked. A channel contributes one of three nonzero
//! magnitudes `{1, |cos θ_k|, |sin θ_k|}` (each carried by two of the sixteen
//! two-qubit strings) or zero, so the whole spectrum is the distribution of
//! products of independently chosen channel magnitudes. Three routes to that
//! distribution are provided: [`enumerate_spectrum`] (exact, small N),
//! [`histogram_convolution`] (binned in `ℓ = −ln x`, any N) and
//! [`sample_spectrum`] (seeded Monte Carlo).

mod counts;
mod enumerate;
mod gap;
mod histogram;
mod sampling;
pub mod stats;
mod table;
mod tail;

pub use counts::{string_counts, StringCounts};
pub use enumerate::{
    enumerate_spectrum, enumerate_spectrum_with_cap, EnumeratedSpectrum, DEFAULT_ENUMERATION_CAP,
};
pub use gap::magic_gap;
pub use histogram::{histogram_convolution, BinSpec, Normalization, PauliHistogram, XHistogram};
pub use sampling::{sample_spectrum, SpectrumSampler, SAMPLE_BLOCK};
pub use table::{channel_table, channel_tables, ChannelPauliTable, NONZERO_MULTIPLICITY, ZERO_MULTIPLICITY};
pub use tail::{default_tail_window, fit_exponential_tail, scaling_exponent, TailFit};

/// Channel magnitudes below this are exact zeros.
pub const ZERO_TOLERANCE: f64 = 1e-14;

/// Magnitudes within this distance of one are unit strings.
pub const UNIT_TOLERANCE: f64 = 1e-12;

pub(crate) fn is_unit(x: f64) -> bool {
    (x - 1.0).abs() <= UNIT_TOLERANCE
}
