use crate::error::{Error, Result};
use crate::model::ModelParams;

use super::table::channel_tables;
use super::{is_unit, NONZERO_MULTIPLICITY};

/// Largest `N` enumerated by default (3^15 ≈ 1.4e7 products).
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

/// All `3^{N/2}` channel products, each standing for `2^{N/2}` Pauli strings.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumeratedSpectrum {
    n_sites: usize,
    magnitudes: Vec<f64>,
}

impl EnumeratedSpectrum {
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }

    pub fn into_magnitudes(self) -> Vec<f64> {
        self.magnitudes
    }

    pub fn len(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magnitudes.is_empty()
    }

    /// Strings represented by each product, `2^{N/2}`.
    pub fn string_multiplicity(&self) -> u64 {
        (NONZERO_MULTIPLICITY as u64).pow((self.n_sites / 2) as u32)
    }

    /// Products equal to one within the unit tolerance.
    pub fn unit_count(&self) -> usize {
        self.magnitudes.iter().filter(|&&x| is_unit(x)).count()
    }

    /// Products that vanish because some channel magnitude is zero.
    pub fn zero_count(&self) -> usize {
        self.magnitudes.iter().filter(|&&x| x == 0.0).count()
    }

    /// Mean of `x²` over the products; equals `(2/3)^{N/2}`.
    pub fn mean_square(&self) -> f64 {
        self.magnitudes.iter().map(|x| x * x).sum::<f64>() / self.len() as f64
    }

    /// Ascending copy of the magnitudes.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.magnitudes.clone();
        v.sort_by(f64::total_cmp);
        v
    }
}

/// Exact enumeration with the default size cap.
pub fn enumerate_spectrum(params: &ModelParams) -> Result<EnumeratedSpectrum> {
    enumerate_spectrum_with_cap(params, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_spectrum_with_cap(
    params: &ModelParams,
    max_sites: usize,
) -> Result<EnumeratedSpectrum> {
    let n_sites = params.n_sites();
    if n_sites > max_sites {
        return Err(Error::SizeGuard { what: "spectrum enumeration", n_sites, cap: max_sites });
    }
    let tables = channel_tables(params);
    let mut magnitudes = Vec::with_capacity(3usize.pow(tables.len() as u32));
    magnitudes.push(1.0);
    // The last channel varies slowest.
    for t in &tables {
        let prev = std::mem::take(&mut magnitudes);
        magnitudes.reserve(prev.len() * 3);
        for &m in &t.magnitudes {
            magnitudes.extend(prev.iter().map(|&p| p * m));
        }
    }
    Ok(EnumeratedSpectrum { n_sites, magnitudes })
}
