use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Result;
use crate::model::validate_size;

/// Exact string counts for `N` momentum qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringCounts {
    /// `4^N`
    pub total: BigUint,
    /// `6^{N/2}`
    pub nonzero: BigUint,
    /// `2^{N/2}`
    pub unit: BigUint,
    /// `4^N − 6^{N/2}`
    pub zero: BigUint,
}

pub fn string_counts(n_sites: usize) -> Result<StringCounts> {
    validate_size(n_sites)?;
    let half = (n_sites / 2) as u32;
    let total = BigUint::from(4u32).pow(n_sites as u32);
    let nonzero = BigUint::from(6u32).pow(half);
    let unit = BigUint::from(2u32).pow(half);
    let zero = &total - &nonzero;
    Ok(StringCounts { total, nonzero, unit, zero })
}
