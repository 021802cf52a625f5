use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::model::ChannelAmplitudes;

/// Outcome of diagonalizing one `(−k, k)` block.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelCheck {
    pub momentum: f64,
    /// `⟨Φ_k|H_k|Φ_k⟩`
    pub energy: f64,
    /// `−E(k)`
    pub expected_energy: f64,
    /// `‖H_k|Φ_k⟩ − energy·|Φ_k⟩‖`
    pub residual: f64,
    /// Ascending eigenvalues of the block.
    pub eigenvalues: [f64; 4],
}

impl ChannelCheck {
    /// Energy equals `−E(k)`, is the lowest level, and the state is an eigenvector.
    pub fn passes(&self, tol: f64) -> bool {
        (self.energy - self.expected_energy).abs() <= tol
            && (self.energy - self.eigenvalues[0]).abs() <= tol
            && self.residual <= tol
    }
}

/// Two-qubit block `J[(g − cos k)(σ^z_k + σ^z_{−k}) + 2i sin k (σ^+_k σ^+_{−k} − σ^−_k σ^−_{−k})]`
/// in the basis `|b_{−k} b_k⟩ = |00⟩, |01⟩, |10⟩, |11⟩` (slot `−k` is the low bit).
///
/// The pairing term carries `+2i`: with `σ^+|0⟩ = |1⟩` and `σ^z|1⟩ = |1⟩` this
/// is the sign for which `u|00⟩ − iv|11⟩` is the lowest state.
pub fn channel_hamiltonian(g: f64, k: f64, coupling: f64) -> Matrix4<Complex64> {
    let a = coupling * (g - k.cos());
    let p = Complex64::new(0.0, 2.0 * coupling * k.sin());
    let z = Complex64::new(0.0, 0.0);
    let r = |x: f64| Complex64::new(x, 0.0);
    Matrix4::new(
        r(-2.0 * a), z, z, -p,
        z, z, z, z,
        z, z, z, z,
        p, z, z, r(2.0 * a),
    )
}

pub fn channel_hamiltonian_check(g: f64, k: f64, coupling: f64) -> Result<ChannelCheck> {
    let ch = ChannelAmplitudes::at(g, k, coupling)?;
    let h = channel_hamiltonian(g, k, coupling);
    let zero = Complex64::new(0.0, 0.0);
    let phi = Vector4::new(Complex64::new(ch.u, 0.0), zero, zero, Complex64::new(0.0, -ch.v));
    let h_phi = h * phi;
    let energy = phi.dotc(&h_phi).re;
    let residual = (h_phi - phi * Complex64::new(energy, 0.0)).norm();
    let mut eigenvalues: [f64; 4] = SymmetricEigen::new(h).eigenvalues.into();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(ChannelCheck { momentum: k, energy, expected_energy: -ch.energy, residual, eigenvalues })
}
