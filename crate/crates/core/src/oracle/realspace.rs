//! Exact diagonalization of the periodic chain `H = −J Σ_n (σ^x_n σ^x_{n+1} + g σ^z_n)`.
//!
//! Site `n` is bit `n` of the basis index with the same qubit convention as the
//! momentum oracle (`|1⟩` is spin-up). The ground state is found by Lanczos
//! iteration restricted to the even sector of the spin-flip parity `Π_n σ^z_n`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{channel_amplitudes, ModelParams};

use super::dense::{DenseState, SlotLabel, DENSE_CAP};
use super::pauli::power_sum;

/// Largest chain for which real-space magic is enumerated (`4^10` strings).
pub const REALSPACE_STRING_CAP: usize = 10;

const LANCZOS_TOLERANCE: f64 = 1e-13;

/// Spin-flip parity sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `Π σ^z = (−1)^{number of down spins}`.
    fn contains(self, index: usize, n: usize) -> bool {
        let downs = n as u32 - index.count_ones();
        downs.is_multiple_of(2) == (self == Parity::Even)
    }
}

/// Real-space ground state and its energy bookkeeping.
#[derive(Debug, Clone)]
pub struct RealSpaceGroundState {
    pub state: DenseState,
    pub energy: f64,
    /// `‖Hψ − Eψ‖`
    pub residual: f64,
    /// Lowest odd-sector energy minus the even ground energy.
    pub parity_splitting: f64,
    /// Set for `g < 1`, where the two sectors become degenerate as `N` grows.
    pub quasi_degenerate: bool,
}

/// `H|ψ⟩` for a real vector in the full `2^N` space.
pub fn apply_hamiltonian(params: &ModelParams, psi: &[f64], out: &mut [f64]) {
    let n = params.n_sites();
    let (j, g) = (params.coupling(), params.g());
    for (i, o) in out.iter_mut().enumerate() {
        let ups = i.count_ones() as f64;
        // Σ σ^z = ups − downs
        *o = -j * g * (2.0 * ups - n as f64) * psi[i];
    }
    for site in 0..n {
        let flip = 1usize << site | 1usize << ((site + 1) % n);
        for (i, o) in out.iter_mut().enumerate() {
            *o -= j * psi[i ^ flip];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Lowest eigenpair in one parity sector by Lanczos with full reorthogonalization.
fn lanczos(params: &ModelParams, parity: Parity) -> (f64, Vec<f64>) {
    let n = params.n_sites();
    let dim = 1usize << n;
    let sector: Vec<bool> = (0..dim).map(|i| parity.contains(i, n)).collect();
    let sector_dim = sector.iter().filter(|&&s| s).count();
    // The uniform sector vector overlaps the Perron–Frobenius ground state.
    let start = 1.0 / (sector_dim as f64).sqrt();
    let mut basis: Vec<Vec<f64>> =
        vec![sector.iter().map(|&s| if s { start } else { 0.0 }).collect()];
    let (mut alpha, mut beta) = (Vec::new(), Vec::new());
    let mut w = vec![0.0; dim];
    let max_iter = sector_dim.min(300);
    loop {
        let v = basis.last().unwrap();
        apply_hamiltonian(params, v, &mut w);
        alpha.push(dot(v, &w));
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let norm = dot(&w, &w).sqrt();
        let m = alpha.len();
        let t = DMatrix::from_fn(m, m, |r, c| {
            if r == c {
                alpha[r]
            } else if r + 1 == c || c + 1 == r {
                beta[r.min(c)]
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(t);
        let lo = eig.eigenvalues.imin();
        let ritz = eig.eigenvalues[lo];
        let tail = eig.eigenvectors[(m - 1, lo)].abs();
        if norm * tail < LANCZOS_TOLERANCE * ritz.abs().max(1.0) || m >= max_iter || norm < 1e-300 {
            let mut psi = vec![0.0; dim];
            for (b, c) in basis.iter().zip(eig.eigenvectors.column(lo).iter()) {
                psi.iter_mut().zip(b).for_each(|(x, y)| *x += c * y);
            }
            let s = dot(&psi, &psi).sqrt();
            psi.iter_mut().for_each(|x| *x /= s);
            return (ritz, psi);
        }
        beta.push(norm);
        basis.push(w.iter().map(|x| x / norm).collect());
    }
}

/// Even-sector ground state of the periodic chain for `N ≤ 14`.
pub fn realspace_ground_state(params: &ModelParams) -> Result<RealSpaceGroundState> {
    let n = params.n_sites();
    if n > DENSE_CAP {
        return Err(Error::SizeGuard { what: "real-space diagonalization", n_sites: n, cap: DENSE_CAP });
    }
    let (energy, mut psi) = lanczos(params, Parity::Even);
    let (odd_energy, _) = lanczos(params, Parity::Odd);
    // Fix the global sign so the largest amplitude is positive.
    let big = psi.iter().copied().fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
    if big < 0.0 {
        psi.iter_mut().for_each(|x| *x = -*x);
    }
    let mut h_psi = vec![0.0; psi.len()];
    apply_hamiltonian(params, &psi, &mut h_psi);
    let residual = h_psi.iter().zip(&psi).map(|(h, p)| (h - energy * p).powi(2)).sum::<f64>().sqrt();
    let state = DenseState::from_amplitudes(
        psi.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        (0..n).map(SlotLabel::Site).collect(),
    )?;
    Ok(RealSpaceGroundState {
        state,
        energy,
        residual,
        parity_splitting: odd_energy - energy,
        quasi_degenerate: params.g() < 1.0,
    })
}

/// Free-fermion ground energy `−Σ_{k>0} E(k)` on the half-integer grid.
pub fn free_fermion_energy(params: &ModelParams) -> f64 {
    -channel_amplitudes(params).iter().map(|c| c.energy).sum::<f64>()
}

/// `M_2/N` of a real-space state by exhaustive enumeration, `N ≤ 10`.
pub fn realspace_m2(state: &DenseState) -> Result<f64> {
    let n = state.n_qubits();
    if n > REALSPACE_STRING_CAP {
        return Err(Error::SizeGuard {
            what: "real-space Pauli enumeration",
            n_sites: n,
            cap: REALSPACE_STRING_CAP,
        });
    }
    let s = power_sum(state, 4.0, REALSPACE_STRING_CAP)?;
    let m2 = -(s / (1u64 << n) as f64).ln();
    Ok(m2.max(0.0) / n as f64)
}
