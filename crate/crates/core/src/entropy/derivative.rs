use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::float;
use crate::model::ModelParams;

use super::{magic_m2, thermo_density};

/// Where `M_2/N` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SystemSize {
    Finite(usize),
    Thermodynamic,
}

/// One-sided difference quotients of `M_2/N` and their Richardson limits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeReport {
    pub g: f64,
    pub h: f64,
    pub left: f64,
    pub right: f64,
    pub left_extrap: f64,
    pub right_extrap: f64,
}

fn m2_density(size: SystemSize, g: f64) -> Result<f64> {
    match size {
        SystemSize::Finite(n) => Ok(magic_m2(&ModelParams::new(n, g)?).per_site),
        SystemSize::Thermodynamic => Ok(thermo_density(g, 2.0)?.per_site),
    }
}

/// Two Richardson steps on quotients at `h, h/2, h/4` with `O(h)` leading error.
fn richardson(d: [f64; 3]) -> f64 {
    let r1 = 2.0 * d[1] - d[0];
    let r2 = 2.0 * d[2] - d[1];
    (4.0 * r2 - r1) / 3.0
}

/// Left and right derivatives of `M_2/N` at `g_center`.
pub fn derivative_scan(size: SystemSize, g_center: f64, h: f64) -> Result<DerivativeReport> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {h}")));
    }
    if g_center - h < 0.0 || g_center.is_nan() {
        return Err(Error::InvalidArgument(format!("g_center - h = {} is negative", g_center - h)));
    }
    let f0 = m2_density(size, g_center)?;
    let mut left = [0.0; 3];
    let mut right = [0.0; 3];
    for (i, step) in [h, h / 2.0, h / 4.0].into_iter().enumerate() {
        right[i] = (m2_density(size, g_center + step)? - f0) / step;
        left[i] = (f0 - m2_density(size, g_center - step)?) / step;
    }
    Ok(DerivativeReport {
        g: g_center,
        h,
        left: left[0],
        right: right[0],
        left_extrap: richardson(left),
        right_extrap: richardson(right),
    })
}

/// CSV with header `g,h,left,right,left_extrap,right_extrap`.
pub fn write_derivative_csv<W: Write>(reports: &[DerivativeReport], mut w: W) -> io::Result<()> {
    writeln!(w, "g,h,left,right,left_extrap,right_extrap")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            float(r.g),
            float(r.h),
            float(r.left),
            float(r.right),
            float(r.left_extrap),
            float(r.right_extrap)
        )?;
    }
    Ok(())
}
