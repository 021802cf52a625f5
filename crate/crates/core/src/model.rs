//! The transverse-field Ising chain in momentum space.
//!
//! For `N` spins with periodic boundary conditions the even-parity ground
//! state lives on the half-integer momentum grid `k = π(2m − 1)/N`. Each
//! positive momentum labels a channel `(−k, k)` whose two-qubit state is
//! `u_k|00⟩ − i v_k|11⟩` with `(u_k, v_k) = (cos θ_k/2, sin θ_k/2)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// System size, transverse field and energy unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    n_sites: usize,
    g: f64,
    coupling: f64,
}

impl ModelParams {
    /// Chain of `n_sites` spins at transverse field `g` with unit coupling.
    pub fn new(n_sites: usize, g: f64) -> Result<Self> {
        Self::with_coupling(n_sites, g, 1.0)
    }

    pub fn with_coupling(n_sites: usize, g: f64, coupling: f64) -> Result<Self> {
        validate_size(n_sites)?;
        if !(g.is_finite() && g >= 0.0) {
            return Err(Error::InvalidField(g));
        }
        if !(coupling.is_finite() && coupling > 0.0) {
            return Err(Error::InvalidCoupling(coupling));
        }
        Ok(Self { n_sites, g, coupling })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// Number of `(−k, k)` channels, `N/2`.
    pub fn n_channels(&self) -> usize {
        self.n_sites / 2
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }
}

pub(crate) fn validate_size(n_sites: usize) -> Result<()> {
    if n_sites < 2 || !n_sites.is_multiple_of(2) {
        return Err(Error::InvalidSystemSize(n_sites));
    }
    Ok(())
}

/// The positive half of the half-integer quantized momentum grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    positive_momenta: Vec<f64>,
}

impl MomentumGrid {
    pub fn positive_momenta(&self) -> &[f64] {
        &self.positive_momenta
    }

    pub fn len(&self) -> usize {
        self.positive_momenta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_momenta.is_empty()
    }

    /// Grid spacing `2π/N`.
    pub fn spacing(&self) -> f64 {
        2.0 * PI / (2 * self.positive_momenta.len()) as f64
    }
}

/// `k_m = π(2m − 1)/N` for `m = 1..=N/2`, increasing.
pub fn momentum_grid(n_sites: usize) -> Result<MomentumGrid> {
    validate_size(n_sites)?;
    let n = n_sites as f64;
    let positive_momenta = (1..=n_sites / 2)
        .map(|m| PI * (2 * m - 1) as f64 / n)
        .collect();
    Ok(MomentumGrid { positive_momenta })
}

/// Bogoliubov angle θ ∈ (0, π) with `tan θ = sin k / (g − cos k)`.
///
/// The branch is the two-argument arctangent of `(sin k, g − cos k)`, which
/// puts each channel in its ground state rather than the paired excited state.
pub fn bogoliubov_angle(g: f64, k: f64) -> Result<f64> {
    if !(k > 0.0 && k < PI) {
        return Err(Error::MomentumOutOfRange(k));
    }
    Ok(k.sin().atan2(g - k.cos()))
}

/// Quasiparticle energy `E(k) = 2J √(g² − 2g cos k + 1)`.
pub fn dispersion(g: f64, k: f64, coupling: f64) -> f64 {
    2.0 * coupling * (g - k.cos()).hypot(k.sin())
}

/// Everything the rest of the crate needs to know about one channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelAmplitudes {
    pub momentum: f64,
    pub theta: f64,
    pub u: f64,
    pub v: f64,
    pub energy: f64,
    /// `|cos θ|`
    pub abs_cos: f64,
    /// `|sin θ|`
    pub abs_sin: f64,
}

impl ChannelAmplitudes {
    /// Amplitudes of the channel at momentum `k` for field `g`.
    pub fn at(g: f64, k: f64, coupling: f64) -> Result<Self> {
        let theta = bogoliubov_angle(g, k)?;
        let (a, s) = (g - k.cos(), k.sin());
        let r = a.hypot(s);
        Ok(Self {
            momentum: k,
            theta,
            u: (theta / 2.0).cos(),
            v: (theta / 2.0).sin(),
            energy: 2.0 * coupling * r,
            abs_cos: (a / r).abs(),
            abs_sin: s / r,
        })
    }
}

/// One entry per positive momentum, in grid order.
pub fn channel_amplitudes(params: &ModelParams) -> Vec<ChannelAmplitudes> {
    let grid = momentum_grid(params.n_sites).expect("ModelParams holds a valid size");
    grid.positive_momenta
        .iter()
        .map(|&k| {
            ChannelAmplitudes::at(params.g, k, params.coupling)
                .expect("grid momenta lie in (0, pi)")
        })
        .collect()
}
