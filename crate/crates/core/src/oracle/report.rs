use serde::Serialize;

use crate::entropy::magic_m2;
use crate::error::Result;
use crate::model::{channel_amplitudes, ModelParams};
use crate::spectrum::{enumerate_spectrum, string_counts};

use super::channel::{channel_hamiltonian_check, ChannelCheck};
use super::dense::build_state;
use super::pauli::{enumerate_all_strings, oracle_renyi, FullPauliSpectrum, PauliLetter, PauliString};
use super::realspace::{
    free_fermion_energy, realspace_ground_state, realspace_m2, REALSPACE_STRING_CAP,
};

const MAGNITUDE_TOLERANCE: f64 = 1e-12;
const ENTROPY_TOLERANCE: f64 = 1e-10;
const CHANNEL_TOLERANCE: f64 = 1e-12;
const ENERGY_TOLERANCE: f64 = 1e-10;

/// Where a string sits relative to the channel structure of the momentum state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StringClass {
    /// Some channel carries a pair outside `{II, ZZ, IZ, ZI, XY, YX}`.
    Zero,
    /// Every channel carries `II` or `ZZ`.
    Unit,
    /// Any other product of the six channel pairs.
    Generic,
}

/// Classifies a string on `(−k, k)` slot pairs `(2c, 2c+1)`.
pub fn classify_string(string: &PauliString) -> StringClass {
    use PauliLetter::*;
    let mut unit = true;
    for pair in string.letters().chunks(2) {
        match (pair[0], pair.get(1).copied().unwrap_or(I)) {
            (I, I) | (Z, Z) => {}
            (I, Z) | (Z, I) | (X, Y) | (Y, X) => unit = false,
            _ => return StringClass::Zero,
        }
    }
    if unit {
        StringClass::Unit
    } else {
        StringClass::Generic
    }
}

/// String counts from the structural classification; `nonzero` includes units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SupportCounts {
    pub zero: u64,
    pub nonzero: u64,
    pub unit: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroundEnergyCheck {
    pub realspace: f64,
    pub free_fermion: f64,
    pub deviation: f64,
    pub residual: f64,
    pub parity_splitting: f64,
    pub quasi_degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn at_most(name: &str, value: f64, tolerance: f64) -> Self {
        Self { name: name.into(), value, tolerance, passed: value <= tolerance }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamsRecord {
    pub n_sites: usize,
    pub g: f64,
    pub coupling: f64,
}

/// Verification report, serialized as JSON by the command line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub params: ParamsRecord,
    /// Largest deviation between sorted `|⟨Σ⟩|` from the dense state and the
    /// channel-product multiset.
    pub max_abs_deviation: f64,
    pub m2_closed_form: f64,
    pub m2_bruteforce: f64,
    pub probability_mass: f64,
    pub counts: SupportCounts,
    pub expected_counts: SupportCounts,
    /// Largest `|⟨Σ⟩|` on strings classified as zero.
    pub max_zero_class_value: f64,
    /// Largest `|1 − |⟨Σ⟩||` on strings classified as unit.
    pub max_unit_class_deviation: f64,
    pub channel_residuals: Vec<ChannelCheck>,
    pub ground_energy_check: Option<GroundEnergyCheck>,
    pub momentum_m2_per_site: f64,
    pub realspace_m2: Option<f64>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl OracleReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn expanded_products(params: &ModelParams) -> Result<Vec<f64>> {
    let spec = enumerate_spectrum(params)?;
    let n = params.n_sites();
    let total = 1usize << (2 * n);
    let mult = spec.string_multiplicity() as usize;
    let mut all = Vec::with_capacity(total);
    for &m in spec.magnitudes() {
        all.extend(std::iter::repeat_n(m, mult));
    }
    all.resize(total, 0.0);
    all.sort_by(f64::total_cmp);
    Ok(all)
}

fn classify_all(full: &FullPauliSpectrum) -> (SupportCounts, f64, f64) {
    let mut counts = SupportCounts { zero: 0, nonzero: 0, unit: 0 };
    let (mut zero_dev, mut unit_dev) = (0.0f64, 0.0f64);
    for (s, v) in full.iter() {
        match classify_string(&s) {
            StringClass::Zero => {
                counts.zero += 1;
                zero_dev = zero_dev.max(v.abs());
            }
            StringClass::Unit => {
                counts.unit += 1;
                counts.nonzero += 1;
                unit_dev = unit_dev.max((1.0 - v.abs()).abs());
            }
            StringClass::Generic => counts.nonzero += 1,
        }
    }
    (counts, zero_dev, unit_dev)
}

/// Runs every oracle check for one `(N, g)`; requires `N ≤ 8`.
pub fn run_oracle(params: &ModelParams) -> Result<OracleReport> {
    let n = params.n_sites();
    let state = build_state(params)?;
    let full = enumerate_all_strings(&state)?;

    let dense = full.sorted_magnitudes();
    let products = expanded_products(params)?;
    let max_abs_deviation =
        dense.iter().zip(&products).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);

    let (counts, max_zero_class_value, max_unit_class_deviation) = classify_all(&full);
    let sc = string_counts(n)?;
    let to_u64 = |b: &num_bigint::BigUint| u64::try_from(b).expect("N ≤ 8 fits in u64");
    let expected_counts =
        SupportCounts { zero: to_u64(&sc.zero), nonzero: to_u64(&sc.nonzero), unit: to_u64(&sc.unit) };

    let m2_closed = magic_m2(params);
    let m2_brute = oracle_renyi(&state, 2.0)?;
    let probability_mass = full.probability_mass();

    let channel_residuals: Vec<ChannelCheck> = channel_amplitudes(params)
        .iter()
        .map(|c| channel_hamiltonian_check(params.g(), c.momentum, params.coupling()))
        .collect::<Result<_>>()?;

    let gs = realspace_ground_state(params)?;
    let free = free_fermion_energy(params);
    let ground = GroundEnergyCheck {
        realspace: gs.energy,
        free_fermion: free,
        deviation: (gs.energy - free).abs(),
        residual: gs.residual,
        parity_splitting: gs.parity_splitting,
        quasi_degenerate: gs.quasi_degenerate,
    };
    let realspace = if n <= REALSPACE_STRING_CAP { Some(realspace_m2(&gs.state)?) } else { None };

    let worst_channel = channel_residuals
        .iter()
        .map(|c| {
            (c.energy - c.expected_energy)
                .abs()
                .max(c.residual)
                .max((c.energy - c.eigenvalues[0]).abs())
        })
        .fold(0.0, f64::max);
    let count_mismatch = (counts != expected_counts) as u8 as f64;
    let checks = vec![
        CheckResult::at_most("magnitude_multiset", max_abs_deviation, MAGNITUDE_TOLERANCE),
        CheckResult::at_most("string_counts", count_mismatch, 0.0),
        CheckResult::at_most("zero_class_values", max_zero_class_value, MAGNITUDE_TOLERANCE),
        CheckResult::at_most("unit_class_values", max_unit_class_deviation, MAGNITUDE_TOLERANCE),
        CheckResult::at_most("m2_bruteforce", (m2_brute - m2_closed.value).abs(), ENTROPY_TOLERANCE),
        CheckResult::at_most("probability_mass", (probability_mass - 1.0).abs(), ENTROPY_TOLERANCE),
        CheckResult::at_most("channel_eigencheck", worst_channel, CHANNEL_TOLERANCE),
        CheckResult::at_most("ground_energy", ground.deviation, ENERGY_TOLERANCE),
    ];
    let passed = checks.iter().all(|c| c.passed);
    Ok(OracleReport {
        params: ParamsRecord { n_sites: n, g: params.g(), coupling: params.coupling() },
        max_abs_deviation,
        m2_closed_form: m2_closed.value,
        m2_bruteforce: m2_brute,
        probability_mass,
        counts,
        expected_counts,
        max_zero_class_value,
        max_unit_class_deviation,
        channel_residuals,
        ground_energy_check: Some(ground),
        momentum_m2_per_site: m2_closed.per_site,
        realspace_m2: realspace,
        checks,
        passed,
    })
}
