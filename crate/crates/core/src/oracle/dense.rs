use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{channel_amplitudes, ModelParams};

/// Largest `N` for which a `2^N` state vector is built.
pub const DENSE_CAP: usize = 14;

const NORM_TOLERANCE: f64 = 1e-12;

/// What a tensor slot stands for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SlotLabel {
    /// Momentum mode `k` (negative for the `−k` partner).
    Momentum(f64),
    /// Lattice site of the real-space chain.
    Site(usize),
}

/// Normalized `2^N` amplitude vector; slot `j` is bit `j` of the index.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    amplitudes: Vec<Complex64>,
    labels: Vec<SlotLabel>,
}

impl DenseState {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, labels: Vec<SlotLabel>) -> Result<Self> {
        if amplitudes.len() != 1usize << labels.len() {
            return Err(Error::LengthMismatch {
                expected: 1usize << labels.len(),
                found: amplitudes.len(),
            });
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidArgument(format!("state norm² is {norm}, not 1")));
        }
        Ok(Self { amplitudes, labels })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn labels(&self) -> &[SlotLabel] {
        &self.labels
    }

    pub fn n_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.amplitudes.iter().filter(|a| a.norm_sqr() > 0.0).count()
    }
}

/// `⊗_k (u_k|00⟩ − i v_k|11⟩)` with slots `−k₁, k₁, −k₂, k₂, …`.
pub fn build_state(params: &ModelParams) -> Result<DenseState> {
    let order: Vec<usize> = (0..params.n_channels()).collect();
    build_state_with_order(params, &order)
}

/// As [`build_state`] with channels placed in the order `order`: slot pair
/// `(2j, 2j+1)` holds `(−k, k)` of channel `order[j]`.
pub fn build_state_with_order(params: &ModelParams, order: &[usize]) -> Result<DenseState> {
    let n = params.n_sites();
    if n > DENSE_CAP {
        return Err(Error::SizeGuard { what: "dense state", n_sites: n, cap: DENSE_CAP });
    }
    let channels = channel_amplitudes(params);
    let mut seen = vec![false; channels.len()];
    if order.len() != channels.len() {
        return Err(Error::LengthMismatch { expected: channels.len(), found: order.len() });
    }
    for &c in order {
        if c >= channels.len() || std::mem::replace(&mut seen[c], true) {
            return Err(Error::InvalidArgument(format!("{order:?} is not a channel permutation")));
        }
    }
    let mut labels = Vec::with_capacity(n);
    let mut amplitudes = vec![Complex64::new(1.0, 0.0)];
    for &c in order {
        let ch = &channels[c];
        labels.push(SlotLabel::Momentum(-ch.momentum));
        labels.push(SlotLabel::Momentum(ch.momentum));
        let pair = [
            Complex64::new(ch.u, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -ch.v),
        ];
        // New slots are the high bits.
        amplitudes = pair.iter().flat_map(|&p| amplitudes.iter().map(move |&a| a * p)).collect();
    }
    DenseState::from_amplitudes(amplitudes, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn n2_limits() {
        let s = build_state(&ModelParams::new(2, 1e12).unwrap()).unwrap();
        assert!((s.amplitudes()[0].re - 1.0).abs() < 1e-15);
        assert!(s.amplitudes()[3].norm() < 1e-11);

        let s = build_state(&ModelParams::new(2, 0.0).unwrap()).unwrap();
        let a = s.amplitudes();
        assert!((a[0] - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((a[3] - Complex64::new(0.0, -FRAC_1_SQRT_2)).norm() < 1e-15);
        assert_eq!((a[1], a[2]), (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn structure() {
        for n in [2, 4, 8, 12] {
            for g in [0.3, 1.0, 2.5] {
                let s = build_state(&ModelParams::new(n, g).unwrap()).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
                assert_eq!(s.nonzero_count(), 1 << (n / 2));
                assert_eq!(s.n_qubits(), n);
            }
        }
    }

    #[test]
    fn labels_follow_pair_order() {
        let s = build_state(&ModelParams::new(6, 0.5).unwrap()).unwrap();
        let k: Vec<f64> = s
            .labels()
            .iter()
            .map(|l| match l {
                SlotLabel::Momentum(k) => *k,
                SlotLabel::Site(_) => unreachable!(),
            })
            .collect();
        for j in 0..3 {
            assert_eq!(k[2 * j], -k[2 * j + 1]);
            assert!(k[2 * j + 1] > 0.0);
        }
        assert!(k[1] < k[3] && k[3] < k[5]);
    }

    #[test]
    fn guards() {
        let p = ModelParams::new(16, 0.5).unwrap();
        assert!(matches!(build_state(&p), Err(Error::SizeGuard { .. })));
        let p = ModelParams::new(4, 0.5).unwrap();
        assert!(build_state_with_order(&p, &[0, 0]).is_err());
        assert!(build_state_with_order(&p, &[1]).is_err());
        assert!(build_state_with_order(&p, &[1, 0]).is_ok());
    }
}
