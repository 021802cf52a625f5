use crate::model::{channel_amplitudes, ChannelAmplitudes, ModelParams};

use super::{is_unit, ZERO_TOLERANCE};

/// Strings per channel carrying each nonzero magnitude.
pub const NONZERO_MULTIPLICITY: u32 = 2;
/// Two-qubit strings per channel with vanishing expectation value.
pub const ZERO_MULTIPLICITY: u32 = 10;

/// The three distinct nonzero magnitudes of a `(−k, k)` channel.
///
/// `magnitudes = [1, |v² − u²|, |2uv|] = [1, |cos θ|, |sin θ|]`, with values
/// below [`ZERO_TOLERANCE`](super::ZERO_TOLERANCE) snapped to `0` and values
/// within [`UNIT_TOLERANCE`](super::UNIT_TOLERANCE) of one snapped to `1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelPauliTable {
    pub magnitudes: [f64; 3],
}

impl ChannelPauliTable {
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::from_raw(c.abs(), s.abs())
    }

    fn from_raw(c: f64, s: f64) -> Self {
        let snap = |x: f64| {
            if x < ZERO_TOLERANCE {
                0.0
            } else if is_unit(x) {
                1.0
            } else {
                x
            }
        };
        Self { magnitudes: [1.0, snap(c), snap(s)] }
    }

    /// `Σ multiplicity × magnitude²` over the sixteen strings; always 4.
    pub fn squared_mass(&self) -> f64 {
        NONZERO_MULTIPLICITY as f64 * self.magnitudes.iter().map(|m| m * m).sum::<f64>()
    }

    pub fn total_multiplicity(&self) -> u32 {
        3 * NONZERO_MULTIPLICITY + ZERO_MULTIPLICITY
    }
}

pub fn channel_table(amps: &ChannelAmplitudes) -> ChannelPauliTable {
    let (u, v) = (amps.u, amps.v);
    ChannelPauliTable::from_raw((v * v - u * u).abs(), (2.0 * u * v).abs())
}

pub fn channel_tables(params: &ModelParams) -> Vec<ChannelPauliTable> {
    channel_amplitudes(params).iter().map(channel_table).collect()
}
