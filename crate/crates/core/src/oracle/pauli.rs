use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::dense::DenseState;

/// Largest imaginary part tolerated in an expectation value.
pub const IMAGINARY_TOLERANCE: f64 = 1e-12;
/// Default size cap for exhaustive `4^N` enumeration.
pub const DEFAULT_STRING_CAP: usize = 8;

/// Single-qubit Pauli operator.
///
/// On every qubit `|1⟩` is spin-up: `σ^z = diag(−1, +1)`, `σ^+|0⟩ = |1⟩`,
/// `σ^x = σ^+ + σ^−`, `σ^y = −i(σ^+ − σ^−)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    /// `(x, z)` bits: the letter flips the qubit iff `x`, and carries a
    /// `±1` sign depending on the qubit iff `z`.
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Z => (false, true),
            PauliLetter::Y => (true, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (false, true) => PauliLetter::Z,
            (true, true) => PauliLetter::Y,
        }
    }

    /// `σ|b⟩ = phase(b) |b ⊕ x⟩`.
    pub fn phase(self, bit: bool) -> Complex64 {
        let s = if bit { 1.0 } else { -1.0 };
        match self {
            PauliLetter::I | PauliLetter::X => Complex64::new(1.0, 0.0),
            PauliLetter::Z => Complex64::new(s, 0.0),
            PauliLetter::Y => Complex64::new(0.0, s),
        }
    }

    /// Constant `c` in `phase(b) = c·(−1)^b` for letters with a `z` bit.
    fn z_prefactor(self) -> Complex64 {
        match self {
            PauliLetter::I | PauliLetter::X => Complex64::new(1.0, 0.0),
            PauliLetter::Z => Complex64::new(-1.0, 0.0),
            PauliLetter::Y => Complex64::new(0.0, -1.0),
        }
    }
}

/// One Pauli operator per tensor slot, slot 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    letters: Vec<PauliLetter>,
}

impl PauliString {
    pub fn new(letters: Vec<PauliLetter>) -> Self {
        Self { letters }
    }

    pub fn identity(n: usize) -> Self {
        Self { letters: vec![PauliLetter::I; n] }
    }

    pub fn letters(&self) -> &[PauliLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Bit masks with slot `j` at bit `j`.
    pub fn masks(&self) -> (usize, usize) {
        self.letters.iter().enumerate().fold((0, 0), |(xm, zm), (j, l)| {
            let (x, z) = l.bits();
            (xm | (x as usize) << j, zm | (z as usize) << j)
        })
    }

    pub fn from_masks(n: usize, x: usize, z: usize) -> Self {
        let letters =
            (0..n).map(|j| PauliLetter::from_bits(x >> j & 1 == 1, z >> j & 1 == 1)).collect();
        Self { letters }
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' | '0' => Ok(PauliLetter::I),
                'X' => Ok(PauliLetter::X),
                'Y' => Ok(PauliLetter::Y),
                'Z' => Ok(PauliLetter::Z),
                _ => Err(Error::InvalidArgument(format!("not a Pauli letter: {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            let c = match l {
                PauliLetter::I => 'I',
                PauliLetter::X => 'X',
                PauliLetter::Y => 'Y',
                PauliLetter::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `⟨ψ|Σ|ψ⟩` by applying the string to every basis state.
pub fn pauli_expectation(state: &DenseState, string: &PauliString) -> Result<f64> {
    let n = state.n_qubits();
    if string.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: string.len() });
    }
    let (x_mask, _) = string.masks();
    let amps = state.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &a) in amps.iter().enumerate() {
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut phase = Complex64::new(1.0, 0.0);
        for (j, l) in string.letters().iter().enumerate() {
            phase *= l.phase(i >> j & 1 == 1);
        }
        acc += amps[i ^ x_mask].conj() * phase * a;
    }
    real_part(acc)
}

fn real_part(z: Complex64) -> Result<f64> {
    if z.im.abs() > IMAGINARY_TOLERANCE {
        return Err(Error::ImaginaryResidue(z.im));
    }
    Ok(z.re)
}

/// In-place unnormalized Walsh–Hadamard transform.
fn walsh_hadamard(a: &mut [Complex64]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (p, q) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*p + *q, *p - *q);
                *p = s;
                *q = d;
            }
        }
        h *= 2;
    }
}

/// Expectations of all `2^N` strings sharing the flip mask `x`, indexed by `z`.
///
/// `⟨X^x Z^z⟩ = c(x, z) Σ_i conj(ψ_{i⊕x}) ψ_i (−1)^{z·i}`, a Walsh–Hadamard
/// transform in `i`.
fn row(amps: &[Complex64], n: usize, x: usize) -> Result<Vec<f64>> {
    let mut f: Vec<Complex64> = (0..amps.len()).map(|i| amps[i ^ x].conj() * amps[i]).collect();
    walsh_hadamard(&mut f);
    f.iter()
        .enumerate()
        .map(|(z, &w)| {
            let mut c = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if z >> j & 1 == 1 {
                    c *= PauliLetter::from_bits(x >> j & 1 == 1, true).z_prefactor();
                }
            }
            real_part(c * w)
        })
        .collect()
}

/// Signed expectation of every Pauli string on an `N`-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct FullPauliSpectrum {
    n_qubits: usize,
    /// Index `x | z << N`.
    values: Vec<f64>,
}

impl FullPauliSpectrum {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, string: &PauliString) -> Option<f64> {
        if string.len() != self.n_qubits {
            return None;
        }
        let (x, z) = string.masks();
        Some(self.values[x | z << self.n_qubits])
    }

    /// `(string, value)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (PauliString, f64)> + '_ {
        let n = self.n_qubits;
        let mask = (1usize << n) - 1;
        self.values
            .iter()
            .enumerate()
            .map(move |(idx, &v)| (PauliString::from_masks(n, idx & mask, idx >> n), v))
    }

    /// Ascending `|⟨Σ⟩|`.
    pub fn sorted_magnitudes(&self) -> Vec<f64> {
        let mut m: Vec<f64> = self.values.iter().map(|v| v.abs()).collect();
        m.sort_by(f64::total_cmp);
        m
    }

    /// `Σ_Σ ⟨Σ⟩² / 2^N`, one for a pure state.
    pub fn probability_mass(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>() / (1u64 << self.n_qubits) as f64
    }
}

/// All `4^N` expectations with the default cap `N ≤ 8`.
pub fn enumerate_all_strings(state: &DenseState) -> Result<FullPauliSpectrum> {
    enumerate_all_strings_with_cap(state, DEFAULT_STRING_CAP)
}

pub fn enumerate_all_strings_with_cap(
    state: &DenseState,
    max_qubits: usize,
) -> Result<FullPauliSpectrum> {
    let n = state.n_qubits();
    if n > max_qubits {
        return Err(Error::SizeGuard { what: "Pauli string enumeration", n_sites: n, cap: max_qubits });
    }
    let dim = 1usize << n;
    let rows: Vec<Vec<f64>> =
        (0..dim).into_par_iter().map(|x| row(state.amplitudes(), n, x)).collect::<Result<_>>()?;
    let mut values = vec![0.0; dim * dim];
    for (x, r) in rows.into_iter().enumerate() {
        for (z, v) in r.into_iter().enumerate() {
            values[x | z << n] = v;
        }
    }
    Ok(FullPauliSpectrum { n_qubits: n, values })
}

/// `Σ_Σ |⟨Σ⟩|^{2n}` over all strings, reduced row by row.
pub(crate) fn power_sum(state: &DenseState, power: f64, max_qubits: usize) -> Result<f64> {
    let n = state.n_qubits();
    if n > max_qubits {
        return Err(Error::SizeGuard { what: "Pauli string enumeration", n_sites: n, cap: max_qubits });
    }
    let partial: Vec<f64> = (0..1usize << n)
        .into_par_iter()
        .map(|x| row(state.amplitudes(), n, x).map(|r| r.iter().map(|v| v.abs().powf(power)).sum()))
        .collect::<Result<_>>()?;
    Ok(partial.iter().sum())
}

/// Stabilizer Rényi entropy `M_n` of an arbitrary dense state by brute force.
pub fn oracle_renyi(state: &DenseState, n: f64) -> Result<f64> {
    crate::entropy::check_renyi_index(n)?;
    let q = state.n_qubits() as f64;
    let ln2 = std::f64::consts::LN_2;
    let s = power_sum(state, 2.0 * n, DEFAULT_STRING_CAP.max(10))?;
    Ok((s.ln() - n * q * ln2) / (1.0 - n) - q * ln2)
}
