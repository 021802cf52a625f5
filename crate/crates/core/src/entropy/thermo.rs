use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

use super::quadrature::integrate_panels;
use super::{channel_m2_term, channel_renyi_term, check_renyi_index};

/// Absolute error target on the per-site density.
pub const THERMO_TOLERANCE: f64 = 1e-10;

/// Per-site entropy in the thermodynamic limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoDensity {
    pub g: f64,
    pub renyi_n: f64,
    pub per_site: f64,
    pub abs_error: f64,
}

/// `lim M_n/N = (1/2π) ∫_0^π term(θ(g, k)) dk`.
///
/// The channel angle turns over on the scale `|g − 1|` near `k = 0`, so for
/// `0 < |g − 1| < 0.1` the first panels are geometrically refined towards
/// zero before adaptive bisection takes over.
pub fn thermo_density(g: f64, n: f64) -> Result<ThermoDensity> {
    check_renyi_index(n)?;
    if !(g.is_finite() && g >= 0.0) {
        return Err(Error::InvalidField(g));
    }
    let integrand = |k: f64| {
        let (a, s) = (g - k.cos(), k.sin());
        let r = a.hypot(s);
        if r == 0.0 {
            return 0.0;
        }
        let (c, s) = ((a / r).abs(), s / r);
        if n == 2.0 {
            channel_m2_term(c, s)
        } else {
            channel_renyi_term(c, s, n)
        }
    };
    let mut breaks = vec![0.0];
    let eps = (g - 1.0).abs();
    if eps > 0.0 && eps < 0.1 {
        let mut x = eps * 2f64.powi(-50);
        while x < (64.0 * eps).min(1.0) {
            breaks.push(x);
            x *= 2.0;
        }
    }
    breaks.push(PI);
    let scale = 1.0 / (2.0 * PI);
    let result = integrate_panels(integrand, &breaks, 0.1 * THERMO_TOLERANCE / scale);
    let per_site = result.value * scale;
    let abs_error = result.error * scale;
    if !result.converged || abs_error > THERMO_TOLERANCE {
        return Err(Error::QuadratureNotConverged { estimate: per_site, achieved_error: abs_error });
    }
    Ok(ThermoDensity { g, renyi_n: n, per_site, abs_error })
}
