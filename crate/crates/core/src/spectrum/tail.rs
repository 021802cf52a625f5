use serde::Serialize;

use crate::error::{Error, Result};

use super::histogram::PauliHistogram;
use super::stats::linear_fit;

/// Minimum number of non-empty bins inside a fit window.
const MIN_BINS: usize = 5;

/// Least-squares line through `ln P(x)` against `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
    pub bins_used: usize,
}

/// Fit window `[4/N, 16/N]` in `x`, just outside the peak at zero.
pub fn default_tail_window(n_sites: usize) -> (f64, f64) {
    let n = n_sites as f64;
    (4.0 / n, 16.0 / n)
}

/// Slope of `ln P(x)` versus `x` over the histogram bins whose midpoint in
/// `x` lies in `[x_lo, x_hi]`.
///
/// `P(x)` is the bin mass divided by the bin's width in `x`; the abscissa is
/// the arithmetic midpoint of the bin in `x`.
pub fn fit_exponential_tail(hist: &PauliHistogram, window: (f64, f64)) -> Result<TailFit> {
    let (x_lo, x_hi) = window;
    if x_lo >= x_hi || x_lo.is_nan() || x_hi.is_nan() {
        return Err(Error::InvalidArgument(format!("empty fit window [{x_lo}, {x_hi}]")));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (i, &w) in hist.weights().iter().enumerate() {
        let (l, r) = hist.bin_edges(i);
        let (x_right, x_left) = ((-l).exp(), (-r).exp());
        let mid = 0.5 * (x_left + x_right);
        if w > 0.0 && mid >= x_lo && mid <= x_hi {
            xs.push(mid);
            ys.push((w / (x_right - x_left)).ln());
        }
    }
    if xs.len() < MIN_BINS {
        return Err(Error::InsufficientData { needed: MIN_BINS, found: xs.len() });
    }
    let (slope, intercept, slope_stderr) = linear_fit(&xs, &ys);
    Ok(TailFit { slope, intercept, slope_stderr, bins_used: xs.len() })
}

/// Exponent `a` in `|slope| ∝ N^a` from a log-log regression over
/// `(N, slope)` pairs.
pub fn scaling_exponent(points: &[(usize, f64)]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::InsufficientData { needed: 2, found: points.len() });
    }
    let x: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let y: Vec<f64> = points.iter().map(|p| p.1.abs().ln()).collect();
    Ok(linear_fit(&x, &y).0)
}
