use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::float;
use crate::model::{validate_size, ModelParams};

use super::table::channel_tables;
use super::{is_unit, stats};

/// Binning of `ℓ = −ln x`: `n_bins` bins of width `delta` from zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BinSpec {
    pub l_max: f64,
    pub delta: f64,
}

impl BinSpec {
    pub fn new(l_max: f64, delta: f64) -> Result<Self> {
        if !(l_max.is_finite() && delta.is_finite() && delta > 0.0 && l_max > 0.0 && delta <= l_max / 4.0) {
            return Err(Error::InvalidBins { l_max, delta });
        }
        if l_max / delta > 5e8 {
            return Err(Error::InvalidBins { l_max, delta });
        }
        Ok(Self { l_max, delta })
    }

    /// `δ = 1e−3`, `L_max = 40 √N`.
    pub fn default_for(n_sites: usize) -> Self {
        Self { l_max: 40.0 * (n_sites as f64).sqrt(), delta: 1e-3 }
    }

    pub fn n_bins(&self) -> usize {
        (self.l_max / self.delta).ceil() as usize
    }

    /// Right edge of the last regular bin; mass beyond goes to overflow.
    pub fn upper_edge(&self) -> f64 {
        self.n_bins() as f64 * self.delta
    }
}

/// What the histogram weights are a fraction of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    /// Fractions of the `6^{N/2}` strings with structurally nonzero value.
    NonzeroStrings,
    /// Fractions of all `4^N` strings.
    AllStrings,
}

impl Normalization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Normalization::NonzeroStrings => "counts-of-nonzero",
            Normalization::AllStrings => "full-4^N",
        }
    }
}

/// Binned distribution of `ℓ = −ln |⟨Σ⟩|` with explicit zero, unit and
/// overflow bookkeeping.
///
/// Regular bin `i` covers `[iδ, (i+1)δ)` and excludes unit strings (`ℓ = 0`
/// exactly). `zero_weight` holds strings whose value vanishes; under
/// [`Normalization::NonzeroStrings`] those are only the ones made zero by a
/// degenerate channel (`|cos θ_k|` or `|sin θ_k|` below the zero tolerance).
#[derive(Debug, Clone, PartialEq)]
pub struct PauliHistogram {
    n_sites: usize,
    bins: BinSpec,
    weights: Vec<f64>,
    overflow_edge: f64,
    overflow: f64,
    zero_weight: f64,
    unit_weight: f64,
    normalization: Normalization,
}

impl PauliHistogram {
    fn empty(n_sites: usize, bins: BinSpec) -> Self {
        Self {
            n_sites,
            bins,
            weights: vec![0.0; bins.n_bins()],
            overflow_edge: bins.upper_edge(),
            overflow: 0.0,
            zero_weight: 0.0,
            unit_weight: 0.0,
            normalization: Normalization::NonzeroStrings,
        }
    }

    /// Histogram of equally weighted magnitudes, e.g. an exact enumeration or
    /// a batch of samples.
    pub fn from_magnitudes(n_sites: usize, values: &[f64], bins: BinSpec) -> Result<Self> {
        validate_size(n_sites)?;
        let mut h = Self::empty(n_sites, bins);
        if values.is_empty() {
            return Err(Error::InvalidArgument("no magnitudes to bin".into()));
        }
        let w = 1.0 / values.len() as f64;
        for &x in values {
            h.add_magnitude(x, w);
        }
        Ok(h)
    }

    fn add_magnitude(&mut self, x: f64, w: f64) {
        if x == 0.0 {
            self.zero_weight += w;
        } else if is_unit(x) {
            self.unit_weight += w;
        } else {
            self.add_at(-x.ln(), w);
        }
    }

    fn add_at(&mut self, ell: f64, w: f64) {
        let i = (ell / self.bins.delta).floor();
        if i < self.weights.len() as f64 {
            self.weights[i.max(0.0) as usize] += w;
        } else {
            self.overflow += w;
        }
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn bins(&self) -> BinSpec {
        self.bins
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn overflow(&self) -> f64 {
        self.overflow
    }

    pub fn zero_weight(&self) -> f64 {
        self.zero_weight
    }

    pub fn unit_weight(&self) -> f64 {
        self.unit_weight
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// `(left, right)` edges of regular bin `i` in `ℓ`.
    pub fn bin_edges(&self, i: usize) -> (f64, f64) {
        let d = self.bins.delta;
        (i as f64 * d, ((i + 1) as f64 * d).min(self.overflow_edge))
    }

    /// Values of `ℓ` at or beyond this edge are counted as overflow.
    pub fn overflow_edge(&self) -> f64 {
        self.overflow_edge
    }

    /// Sum of every weight including zero, unit and overflow.
    pub fn total_mass(&self) -> f64 {
        self.zero_weight + self.unit_weight + self.overflow + self.weights.iter().sum::<f64>()
    }

    /// Mass of strings with nonzero value.
    pub fn nonzero_mass(&self) -> f64 {
        self.unit_weight + self.overflow + self.weights.iter().sum::<f64>()
    }

    /// Re-express the weights under another normalization.
    pub fn with_normalization(&self, target: Normalization) -> Self {
        if target == self.normalization {
            return self.clone();
        }
        // fraction of all strings that are structurally nonzero
        let f = ((self.n_sites / 2) as f64 * (3.0f64 / 8.0).ln()).exp();
        let scale = match target {
            Normalization::AllStrings => f,
            Normalization::NonzeroStrings => 1.0 / f,
        };
        let mut h = self.clone();
        h.weights.iter_mut().for_each(|w| *w *= scale);
        h.overflow *= scale;
        h.unit_weight *= scale;
        h.zero_weight = 1.0 - self.nonzero_mass() * scale;
        h.normalization = target;
        h
    }

    /// Merge groups of `factor` adjacent bins. The last group may be partial.
    pub fn coarsen(&self, factor: usize) -> Self {
        assert!(factor >= 1);
        let mut h = self.clone();
        h.bins.delta *= factor as f64;
        h.bins.l_max = self.overflow_edge;
        h.weights = self.weights.chunks(factor).map(|c| c.iter().sum()).collect();
        h
    }

    /// Coarse bin edges in `ℓ`, including the overflow boundary.
    pub fn edges(&self) -> Vec<f64> {
        let mut e: Vec<f64> = (0..self.weights.len()).map(|i| self.bin_edges(i).0).collect();
        e.push(self.overflow_edge);
        e
    }

    /// Weighted atoms in `x`: bin centres, unit strings at one, zeros at zero
    /// and overflow just above zero.
    pub fn atoms(&self) -> Vec<(f64, f64)> {
        let d = self.bins.delta;
        let mut out = Vec::with_capacity(self.weights.len() + 3);
        out.push((1.0, self.unit_weight));
        out.extend(
            self.weights
                .iter()
                .enumerate()
                .filter(|(_, &w)| w > 0.0)
                .map(|(i, &w)| ((-(i as f64 + 0.5) * d).exp(), w)),
        );
        out.push((f64::MIN_POSITIVE, self.overflow));
        out.push((0.0, self.zero_weight));
        out
    }

    /// Kolmogorov–Smirnov distance to another distribution of magnitudes.
    pub fn ks_distance_to(&self, atoms: &[(f64, f64)]) -> f64 {
        stats::ks_distance(&self.atoms(), atoms)
    }

    /// Total-variation distance between two histograms on the same bins.
    pub fn tv_distance(&self, other: &Self) -> Result<f64> {
        if self.weights.len() != other.weights.len() || self.bins.delta != other.bins.delta {
            return Err(Error::InvalidArgument("histograms use different bins".into()));
        }
        let regular: f64 = self.weights.iter().zip(&other.weights).map(|(a, b)| (a - b).abs()).sum();
        let special = (self.overflow - other.overflow).abs()
            + (self.zero_weight - other.zero_weight).abs()
            + (self.unit_weight - other.unit_weight).abs();
        Ok(0.5 * (regular + special))
    }

    /// Distribution of the regular part in `x = e^{−ℓ}` on `n_bins` uniform
    /// bins over `[0, 1]`, each `ℓ` bin placed at its centre.
    pub fn x_histogram(&self, n_bins: usize) -> XHistogram {
        let mut h = XHistogram::new(n_bins);
        for (i, &w) in self.weights.iter().enumerate() {
            if w > 0.0 {
                h.add((-(i as f64 + 0.5) * self.bins.delta).exp(), w);
            }
        }
        h.add(0.0, self.overflow);
        h
    }

    /// CSV with header `bin_left,bin_right,weight` preceded by the zero,
    /// unit, overflow and normalization comment lines.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# n_sites={}", self.n_sites)?;
        writeln!(w, "# axis=ell")?;
        writeln!(w, "# zero_weight={}", float(self.zero_weight))?;
        writeln!(w, "# unit_weight={}", float(self.unit_weight))?;
        writeln!(w, "# overflow_weight={}", float(self.overflow))?;
        writeln!(w, "# normalization={}", self.normalization.as_str())?;
        writeln!(w, "bin_left,bin_right,weight")?;
        for (i, &x) in self.weights.iter().enumerate() {
            let (l, r) = self.bin_edges(i);
            writeln!(w, "{},{},{}", float(l), float(r), float(x))?;
        }
        Ok(())
    }
}

/// Distribution of `ℓ = Σ_k −ln s_k` with `s_k` uniform over each channel's
/// three magnitudes, by successive binned convolutions.
///
/// Each bin's mass sits at its centre; a shift by `s` splits it linearly
/// between the two nearest centres, so total mass is conserved exactly and
/// every piece stays within `(N/2 + 1)·δ` of its true position.
pub fn histogram_convolution(params: &ModelParams, bins: BinSpec) -> Result<PauliHistogram> {
    let bins = BinSpec::new(bins.l_max, bins.delta)?;
    let mut h = PauliHistogram::empty(params.n_sites(), bins);
    h.unit_weight = 1.0;
    let n = h.weights.len();
    let d = bins.delta;
    let third = 1.0 / 3.0;
    let mut next = vec![0.0; n];
    for table in channel_tables(params) {
        let mut units = 0usize;
        let mut zeros = 0usize;
        let mut shifts = Vec::with_capacity(2);
        for &m in &table.magnitudes {
            if m == 0.0 {
                zeros += 1;
            } else if m == 1.0 {
                units += 1;
            } else {
                shifts.push(-m.ln());
            }
        }
        let stay = units as f64 * third;
        next.iter_mut().zip(&h.weights).for_each(|(a, &b)| *a = b * stay);
        let mut overflow = h.overflow * (1.0 - zeros as f64 * third);
        for &s in &shifts {
            let whole = (s / d).floor();
            let frac = s / d - whole;
            let whole = whole as usize;
            let (lo, hi) = ((1.0 - frac) * third, frac * third);
            for (i, &w) in h.weights.iter().enumerate() {
                if w == 0.0 {
                    continue;
                }
                let j = i + whole;
                if j < n {
                    next[j] += w * lo;
                } else {
                    overflow += w * lo;
                }
                if j + 1 < n {
                    next[j + 1] += w * hi;
                } else {
                    overflow += w * hi;
                }
            }
            // unit strings sit exactly at ℓ = 0
            let j = whole;
            if j < n {
                next[j] += h.unit_weight * third;
            } else {
                overflow += h.unit_weight * third;
            }
        }
        h.zero_weight += (h.nonzero_mass()) * zeros as f64 * third;
        h.unit_weight *= stay;
        h.overflow = overflow;
        std::mem::swap(&mut h.weights, &mut next);
    }
    Ok(h)
}

/// Regular part of the magnitude distribution on uniform bins over `[0, 1]`,
/// as plotted: unit and zero strings excluded, weights normalized to one.
#[derive(Debug, Clone, PartialEq)]
pub struct XHistogram {
    weights: Vec<f64>,
}

impl XHistogram {
    fn new(n_bins: usize) -> Self {
        assert!(n_bins > 0);
        Self { weights: vec![0.0; n_bins] }
    }

    fn add(&mut self, x: f64, w: f64) {
        let n = self.weights.len();
        let i = ((x * n as f64) as usize).min(n - 1);
        self.weights[i] += w;
    }

    /// Bin raw magnitudes, skipping zeros and unit strings.
    pub fn from_magnitudes(values: &[f64], n_bins: usize) -> Self {
        let mut h = Self::new(n_bins);
        for &x in values {
            if x != 0.0 && !is_unit(x) {
                h.add(x, 1.0);
            }
        }
        h
    }

    pub fn n_bins(&self) -> usize {
        self.weights.len()
    }

    pub fn width(&self) -> f64 {
        1.0 / self.weights.len() as f64
    }

    pub fn centers(&self) -> Vec<f64> {
        let w = self.width();
        (0..self.weights.len()).map(|i| (i as f64 + 0.5) * w).collect()
    }

    /// Fraction of the regular mass in each bin.
    pub fn fractions(&self) -> Vec<f64> {
        let t: f64 = self.weights.iter().sum();
        self.weights.iter().map(|w| w / t).collect()
    }

    /// Probability density per bin, integrating to one.
    pub fn density(&self) -> Vec<f64> {
        let w = self.width();
        self.fractions().into_iter().map(|f| f / w).collect()
    }

    /// KS distance between two regular-part histograms on the same grid.
    pub fn ks_distance(&self, other: &Self) -> f64 {
        assert_eq!(self.weights.len(), other.weights.len());
        let (a, b) = (self.fractions(), other.fractions());
        let mut ca = 0.0;
        let mut cb = 0.0;
        let mut best: f64 = 0.0;
        for (x, y) in a.iter().zip(&b) {
            ca += x;
            cb += y;
            best = best.max((ca - cb).abs());
        }
        best
    }

    /// Indices of bins whose density is at least that of both neighbours and
    /// strictly above one of them. The edge bins compare with their single
    /// neighbour.
    pub fn local_maxima(&self) -> Vec<usize> {
        let p = &self.weights;
        let n = p.len();
        (0..n)
            .filter(|&i| {
                let left = if i > 0 { Some(p[i - 1]) } else { None };
                let right = if i + 1 < n { Some(p[i + 1]) } else { None };
                let ge = left.is_none_or(|l| p[i] >= l) && right.is_none_or(|r| p[i] >= r);
                let gt = left.is_some_and(|l| p[i] > l) || right.is_some_and(|r| p[i] > r);
                p[i] > 0.0 && ge && gt
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# axis=x")?;
        writeln!(w, "# normalization=regular-part-density")?;
        writeln!(w, "bin_left,bin_right,density")?;
        let width = self.width();
        for (i, d) in self.density().into_iter().enumerate() {
            writeln!(w, "{},{},{}", float(i as f64 * width), float((i + 1) as f64 * width), float(d))?;
        }
        Ok(())
    }
}

#[cfg(test)]
impl PauliHistogram {
    pub(crate) fn with_weights_for_test(base: &Self, weights: Vec<f64>) -> Self {
        assert_eq!(weights.len(), base.weights.len());
        let mut h = base.clone();
        h.weights = weights;
        h
    }
}
