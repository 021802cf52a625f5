use std::io::Write;

use serde::Serialize;
use tfim_magic::entropy::{
    derivative_scan, entropy_scan, thermo_density, write_derivative_csv, write_scan_csv,
    SystemSize,
};
use tfim_magic::format::float;
use tfim_magic::oracle::run_oracle;
use tfim_magic::spectrum::{
    enumerate_spectrum, histogram_convolution, magic_gap, sample_spectrum, BinSpec, Normalization,
    PauliHistogram, XHistogram,
};
use tfim_magic::{Error, ModelParams};

use crate::grid::{parse_doubling, parse_grid, parse_list};
use crate::{
    CliError, EntropyArgs, Format, GapArgs, HistArgs, Method, NormalizationArg, OracleArgs,
    ThermoArgs,
};

type CmdResult = Result<(), CliError>;

fn grid(spec: &str) -> Result<Vec<f64>, CliError> {
    parse_grid(spec).map_err(CliError::Validation)
}

fn list(spec: &str) -> Result<Vec<f64>, CliError> {
    parse_list(spec).map_err(CliError::Validation)
}

fn json<T: Serialize + ?Sized>(value: &T, out: &mut Vec<u8>) -> CmdResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.push(b'\n');
    Ok(())
}

pub fn entropy(a: &EntropyArgs, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let rows = entropy_scan(a.n_sites, &grid(&a.g)?, &list(&a.renyi)?)?;
    match format {
        Format::Csv => write_scan_csv(&rows, out)?,
        Format::Json => json(&rows, out)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct HistJson<'a> {
    n_sites: usize,
    g: f64,
    method: &'a str,
    normalization: &'a str,
    delta: f64,
    bin_left: Vec<f64>,
    bin_right: Vec<f64>,
    weight: &'a [f64],
    zero_weight: f64,
    unit_weight: f64,
    overflow_weight: f64,
}

#[derive(Serialize)]
struct XHistJson<'a> {
    n_sites: usize,
    g: f64,
    method: &'a str,
    x_centers: Vec<f64>,
    density: Vec<f64>,
}

pub fn hist(a: &HistArgs, format: Format, seed: u64, out: &mut Vec<u8>) -> CmdResult {
    let params = ModelParams::new(a.n_sites, a.g)?;
    let bins = BinSpec::new(a.l_max.unwrap_or(BinSpec::default_for(a.n_sites).l_max), a.delta)?;
    let method = match a.method {
        Method::Exact => "exact",
        Method::Conv => "conv",
        Method::Sample => "sample",
    };
    if a.method == Method::Sample && a.samples == 0 {
        return Err(CliError::Validation("--samples must be at least 1".into()));
    }
    if let Some(n_bins) = a.x_bins {
        if n_bins == 0 {
            return Err(CliError::Validation("--x-bins must be at least 1".into()));
        }
        let xh = match a.method {
            Method::Exact => XHistogram::from_magnitudes(enumerate_spectrum(&params)?.magnitudes(), n_bins),
            Method::Sample => XHistogram::from_magnitudes(&sample_spectrum(&params, a.samples, seed)?, n_bins),
            Method::Conv => histogram_convolution(&params, bins)?.x_histogram(n_bins),
        };
        return match format {
            Format::Csv => Ok(xh.write_csv(out)?),
            Format::Json => json(
                &XHistJson { n_sites: a.n_sites, g: a.g, method, x_centers: xh.centers(), density: xh.density() },
                out,
            ),
        };
    }
    let h = match a.method {
        Method::Exact => PauliHistogram::from_magnitudes(a.n_sites, enumerate_spectrum(&params)?.magnitudes(), bins)?,
        Method::Sample => PauliHistogram::from_magnitudes(a.n_sites, &sample_spectrum(&params, a.samples, seed)?, bins)?,
        Method::Conv => histogram_convolution(&params, bins)?,
    };
    let h = h.with_normalization(match a.normalization {
        NormalizationArg::NonzeroStrings => Normalization::NonzeroStrings,
        NormalizationArg::AllStrings => Normalization::AllStrings,
    });
    match format {
        Format::Csv => h.write_csv(out)?,
        Format::Json => {
            let edges: Vec<(f64, f64)> = (0..h.weights().len()).map(|i| h.bin_edges(i)).collect();
            json(
                &HistJson {
                    n_sites: a.n_sites,
                    g: a.g,
                    method,
                    normalization: h.normalization().as_str(),
                    delta: h.bins().delta,
                    bin_left: edges.iter().map(|e| e.0).collect(),
                    bin_right: edges.iter().map(|e| e.1).collect(),
                    weight: h.weights(),
                    zero_weight: h.zero_weight(),
                    unit_weight: h.unit_weight(),
                    overflow_weight: h.overflow(),
                },
                out,
            )?
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GapRow {
    #[serde(rename = "N")]
    n_sites: usize,
    g: f64,
    magic_gap: f64,
}

pub fn gap(a: &GapArgs, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let sizes = match (&a.doubling, a.n_sites) {
        (Some(spec), _) => parse_doubling(spec).map_err(CliError::Validation)?,
        (None, Some(n)) => vec![n],
        (None, None) => return Err(CliError::Validation("give --n-sites or --doubling".into())),
    };
    let fields = grid(&a.g)?;
    let mut rows = Vec::new();
    for &g in &fields {
        for &n in &sizes {
            rows.push(GapRow { n_sites: n, g, magic_gap: magic_gap(&ModelParams::new(n, g)?) });
        }
    }
    match format {
        Format::Csv => {
            writeln!(out, "N,g,magic_gap")?;
            for r in &rows {
                writeln!(out, "{},{},{}", r.n_sites, float(r.g), float(r.magic_gap))?;
            }
        }
        Format::Json => json(&rows, out)?,
    }
    Ok(())
}

pub fn oracle(a: &OracleArgs, out: &mut Vec<u8>) -> CmdResult {
    let report = run_oracle(&ModelParams::new(a.n_sites, a.g)?)?;
    json(&report, out)?;
    if report.passed {
        Ok(())
    } else {
        let names: Vec<&str> = report.failed_checks().map(|c| c.name.as_str()).collect();
        Err(CliError::Verification(names.join(", ")))
    }
}

#[derive(Serialize)]
struct ThermoRow {
    g: f64,
    n: f64,
    per_site: f64,
    quadrature_error: f64,
    converged: bool,
}

pub fn thermo(a: &ThermoArgs, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let fields = grid(&a.g)?;
    if a.derivative {
        let size = a.n_sites.map_or(SystemSize::Thermodynamic, SystemSize::Finite);
        let reports = fields
            .iter()
            .map(|&g| derivative_scan(size, g, a.h))
            .collect::<Result<Vec<_>, _>>()?;
        match format {
            Format::Csv => write_derivative_csv(&reports, out)?,
            Format::Json => json(&reports, out)?,
        }
        return Ok(());
    }
    let orders = list(&a.renyi)?;
    let mut rows = Vec::new();
    for &g in &fields {
        for &n in &orders {
            let row = match thermo_density(g, n) {
                Ok(t) => ThermoRow { g, n, per_site: t.per_site, quadrature_error: t.abs_error, converged: true },
                Err(Error::QuadratureNotConverged { estimate, achieved_error }) => {
                    eprintln!("tfim-magic: warning: quadrature not converged at g={g}, n={n}");
                    ThermoRow { g, n, per_site: estimate, quadrature_error: achieved_error, converged: false }
                }
                Err(e) => return Err(e.into()),
            };
            rows.push(row);
        }
    }
    match format {
        Format::Csv => {
            writeln!(out, "g,n,per_site,quadrature_error")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", float(r.g), float(r.n), float(r.per_site), float(r.quadrature_error))?;
            }
        }
        Format::Json => json(&rows, out)?,
    }
    Ok(())
}
