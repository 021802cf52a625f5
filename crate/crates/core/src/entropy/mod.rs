//! Stabilizer Rényi entropies of the momentum-space ground state.
//!
//! With `N/2` independent channels the Pauli distribution `⟨Σ⟩²/2^N`
//! factorizes and
//!
//! ```text
//! M_n = 1/(1−n) Σ_{k>0} ln[(1 + |cos θ_k|^{2n} + |sin θ_k|^{2n}) / 2^{2n−1}] − N ln 2
//!     = 1/(1−n) Σ_{k>0} ln[(1 + |cos θ_k|^{2n} + |sin θ_k|^{2n}) / 2],
//! ```
//!
//! the second form folding the `−N ln 2` into the channel sum so that each
//! term vanishes on its own for a stabilizer channel. For `n = 2` this reduces
//! to `M_2 = −Σ ln[(7 + cos 4θ_k)/8]`.

mod derivative;
pub mod quadrature;
mod thermo;

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::float;
use crate::model::{channel_amplitudes, ModelParams};

pub use derivative::{derivative_scan, write_derivative_csv, DerivativeReport, SystemSize};
pub use thermo::{thermo_density, ThermoDensity, THERMO_TOLERANCE};

/// One stabilizer Rényi entropy value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyRecord {
    pub n_sites: usize,
    pub g: f64,
    pub renyi_n: f64,
    /// `M_n`
    pub value: f64,
    /// `M_n / N`; `per_site * N == value` exactly.
    pub per_site: f64,
}

impl EntropyRecord {
    fn from_sum(params: &ModelParams, renyi_n: f64, sum: f64) -> Self {
        let n = params.n_sites() as f64;
        let per_site = sum / n;
        Self { n_sites: params.n_sites(), g: params.g(), renyi_n, value: per_site * n, per_site }
    }
}

pub(crate) fn check_renyi_index(n: f64) -> Result<()> {
    if !(n.is_finite() && n > 0.0) || n == 1.0 {
        return Err(Error::InvalidRenyiIndex(n));
    }
    Ok(())
}

/// Channel contribution `1/(1−n) ln[(1 + c^{2n} + s^{2n})/2]`, never negative.
///
/// Written in terms of `t = min(c², s²)` with `ln_1p`/`exp_m1` so that
/// channels close to a stabilizer state keep full relative precision.
pub(crate) fn channel_renyi_term(abs_cos: f64, abs_sin: f64, n: f64) -> f64 {
    let t = (abs_cos * abs_cos).min(abs_sin * abs_sin);
    let q = 0.5 * ((n * (-t).ln_1p()).exp_m1() + t.powf(n));
    (q.ln_1p() / (1.0 - n)).max(0.0)
}

/// Channel contribution to `M_2`: `−ln[(7 + cos 4θ)/8] = −ln(1 − sin²2θ/4)`.
pub(crate) fn channel_m2_term(abs_cos: f64, abs_sin: f64) -> f64 {
    let sin_2theta = 2.0 * abs_cos * abs_sin;
    -(-0.25 * sin_2theta * sin_2theta).ln_1p()
}

/// `M_n` for real `n > 0`, `n ≠ 1`.
pub fn stabilizer_renyi(params: &ModelParams, n: f64) -> Result<EntropyRecord> {
    check_renyi_index(n)?;
    let sum = channel_amplitudes(params)
        .iter()
        .map(|c| channel_renyi_term(c.abs_cos, c.abs_sin, n))
        .sum();
    Ok(EntropyRecord::from_sum(params, n, sum))
}

/// `M_2 = −Σ_{k>0} ln[(7 + cos 4θ_k)/8]`.
pub fn magic_m2(params: &ModelParams) -> EntropyRecord {
    let sum = channel_amplitudes(params)
        .iter()
        .map(|c| channel_m2_term(c.abs_cos, c.abs_sin))
        .sum();
    EntropyRecord::from_sum(params, 2.0, sum)
}

/// Ferromagnetic-phase value of `M_2/N` in the thermodynamic limit,
/// `−½ ln(7/16 + √3/4)`.
pub fn ferro_m2_density() -> f64 {
    -0.5 * (7.0 / 16.0 + 3f64.sqrt() / 4.0).ln()
}

/// Every `(g, n)` pair at fixed size, `g`-major, evaluated in parallel.
pub fn entropy_scan(n_sites: usize, fields: &[f64], renyi: &[f64]) -> Result<Vec<EntropyRecord>> {
    for &n in renyi {
        check_renyi_index(n)?;
    }
    let params: Vec<ModelParams> =
        fields.iter().map(|&g| ModelParams::new(n_sites, g)).collect::<Result<_>>()?;
    let jobs: Vec<(ModelParams, f64)> =
        params.iter().flat_map(|p| renyi.iter().map(move |&n| (*p, n))).collect();
    jobs.par_iter().map(|(p, n)| stabilizer_renyi(p, *n)).collect()
}

/// CSV with header `N,g,n,M_n,M_n_per_site`.
pub fn write_scan_csv<W: Write>(records: &[EntropyRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "N,g,n,M_n,M_n_per_site")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.n_sites,
            float(r.g),
            float(r.renyi_n),
            float(r.value),
            float(r.per_site)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let m = magic_m2(&ModelParams::new(2, 1.0).unwrap());
        assert!((m.value - (4.0f64 / 3.0).ln()).abs() < 1e-14);
        assert_eq!(m.renyi_n, 2.0);
        assert!(magic_m2(&ModelParams::new(2, 0.0).unwrap()).value.abs() < 1e-15);
        for n in [0.5, 2.0, 3.0, 7.5] {
            let r = stabilizer_renyi(&ModelParams::new(2, 0.0).unwrap(), n).unwrap();
            assert!(r.value.abs() < 1e-15, "n={n}");
        }
    }

    #[test]
    fn stabilizer_limit() {
        for n in [2.0, 4.0] {
            let r = stabilizer_renyi(&ModelParams::new(100, 1e9).unwrap(), n).unwrap();
            assert!(r.value < 1e-12);
        }
        // for n < 1 each channel contributes about |sin θ_k|^{2n}
        let r = stabilizer_renyi(&ModelParams::new(100, 1e9).unwrap(), 0.5).unwrap();
        assert!(r.value > 0.0 && r.value < 1e-7);
        let r = magic_m2(&ModelParams::new(2000, 1e6).unwrap());
        assert!(r.per_site < 1e-12 && r.per_site > 0.0);
    }

    #[test]
    fn renyi_index_validation() {
        let p = ModelParams::new(4, 0.5).unwrap();
        for bad in [1.0, 0.0, -2.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(stabilizer_renyi(&p, bad), Err(Error::InvalidRenyiIndex(_))));
        }
    }

    #[test]
    fn per_site_round_trip_is_exact() {
        for n_sites in [2, 6, 10, 30, 2000] {
            let r = magic_m2(&ModelParams::new(n_sites, 0.77).unwrap());
            assert_eq!(r.per_site * n_sites as f64, r.value);
        }
    }

    #[test]
    fn ferro_constant_at_large_size() {
        let target = ferro_m2_density();
        assert!((target - 0.069_336_464_195_073_93).abs() < 1e-15);
        for g in [0.2, 0.5, 0.8] {
            let r = magic_m2(&ModelParams::new(2000, g).unwrap());
            assert!((r.per_site - target).abs() < 1e-3);
        }
    }

    #[test]
    fn volume_law() {
        for g in [0.3, 0.8, 1.5, 3.0] {
            let a = magic_m2(&ModelParams::new(512, g).unwrap()).value;
            let b = magic_m2(&ModelParams::new(1024, g).unwrap()).value;
            assert!((b / a - 2.0).abs() < 0.02, "g={g}: {}", b / a);
        }
    }

    #[test]
    fn scan_order_and_csv() {
        let rows = entropy_scan(8, &[0.5, 1.5], &[2.0, 3.0]).unwrap();
        let keys: Vec<(f64, f64)> = rows.iter().map(|r| (r.g, r.renyi_n)).collect();
        assert_eq!(keys, vec![(0.5, 2.0), (0.5, 3.0), (1.5, 2.0), (1.5, 3.0)]);
        let mut out = Vec::new();
        write_scan_csv(&rows, &mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        assert!(s.starts_with("N,g,n,M_n,M_n_per_site\n8,0.5,2,"));
        assert_eq!(s.lines().count(), 5);
        assert!(entropy_scan(8, &[0.5], &[1.0]).is_err());
    }

    proptest! {
        #[test]
        fn m2_identity(n_sites in (1usize..200).prop_map(|h| 2 * h), g in 0.0f64..6.0) {
            let p = ModelParams::new(n_sites, g).unwrap();
            let a = magic_m2(&p);
            let b = stabilizer_renyi(&p, 2.0).unwrap();
            prop_assert!((a.value - b.value).abs() < 1e-12);
            prop_assert!(a.value >= 0.0);
        }

        #[test]
        fn cos4theta_form(theta in 0.0f64..std::f64::consts::PI) {
            let (s, c) = theta.sin_cos();
            let direct = -((7.0 + (4.0 * theta).cos()) / 8.0).ln();
            prop_assert!((channel_m2_term(c.abs(), s.abs()) - direct).abs() < 1e-14);
        }

        #[test]
        fn renyi_term_matches_naive_form(theta in 0.05f64..3.09, n in 0.2f64..6.0) {
            prop_assume!((n - 1.0).abs() > 1e-3);
            let (s, c) = theta.sin_cos();
            let naive = ((1.0 + c.abs().powf(2.0 * n) + s.abs().powf(2.0 * n)) / 2f64.powf(2.0 * n - 1.0)).ln()
                / (1.0 - n) - 2.0 * 2f64.ln();
            let t = channel_renyi_term(c.abs(), s.abs(), n);
            prop_assert!((t - naive).abs() < 1e-12, "{} vs {}", t, naive);
            prop_assert!(t >= 0.0);
        }
    }
}
