//! Command implementations. Each returns the text to emit.

use rayon::prelude::*;
use serde::Serialize;

use maclaurin_core::bifurcation::{self, BifurcationScan, Placement};
use maclaurin_core::family::{self, coefficients, eccentricity_grid, mu_hat};
use maclaurin_core::oracles::{self, Fault, OracleReport, VerifyConfig};
use maclaurin_core::{spectrum, BifurcationEvent, Error, SpectrumReport, Units};

use crate::output::{csv_table, fmt_num, to_json, UnitsHeader};
use crate::CliError;

/// Agreement required between closed-form and numeric spectra.
pub const SPECTRUM_AGREEMENT_TOL: f64 = 1e-10;
/// Range covered by `verify --grid-points`.
pub const VERIFY_RANGE: (f64, f64) = (0.01, 0.99);

pub fn grid(emin: f64, emax: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if step.is_nan() || step <= 0.0 {
        return Err(CliError::Usage(format!(
            "step must be positive, got {step}"
        )));
    }
    if !(0.0 < emin && emin < emax && emax < 1.0) {
        return Err(CliError::Usage(format!(
            "need 0 < emin < emax < 1, got emin = {emin}, emax = {emax}"
        )));
    }
    Ok(eccentricity_grid(emin, emax, step))
}

fn opt_num(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

pub fn family_table(grid: &[f64], u: &Units) -> Result<String, CliError> {
    let rows = grid
        .par_iter()
        .map(|&e| {
            let c = coefficients(e, u)?;
            Ok(vec![
                fmt_num(e),
                fmt_num(c.omega_sq),
                fmt_num(mu_hat(e, u)?),
                fmt_num(c.a1),
                fmt_num(c.a2),
                fmt_num(c.s1),
                fmt_num(c.s2),
                fmt_num(c.eta1_sq),
                opt_num(c.eta2_sq),
                (c.s2 > 0.0).to_string(),
            ])
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let header = [
        "e", "omega2", "mu_hat", "A1", "A2", "S1", "S2", "eta1_sq", "eta2_sq", "stable",
    ];
    Ok(csv_table(u, &header, &rows)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    Eta1(bool),
    Eta2(bool),
}

impl std::str::FromStr for Locus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        match body {
            "eta1" => Ok(Locus::Eta1(negative)),
            "eta2" => Ok(Locus::Eta2(negative)),
            _ => Err(format!(
                "unknown locus '{s}', expected [+-]eta1 or [+-]eta2"
            )),
        }
    }
}

pub fn resolve_eta(
    e: f64,
    eta: Option<f64>,
    locus: Option<Locus>,
    u: &Units,
) -> Result<f64, CliError> {
    let Some(locus) = locus else {
        return Ok(eta.unwrap_or(0.0));
    };
    let c = coefficients(e, u)?;
    let (magnitude, negative) = match locus {
        Locus::Eta1(n) => (c.eta1(), n),
        Locus::Eta2(n) => (
            c.eta2().ok_or_else(|| {
                CliError::Domain(format!(
                    "eta2 is undefined at e = {e}: S2 < 0 beyond e_crit"
                ))
            })?,
            n,
        ),
    };
    Ok(if negative { -magnitude } else { magnitude })
}

#[derive(Serialize)]
struct SpectrumOutput {
    units: UnitsHeader,
    #[serde(flatten)]
    report: SpectrumReport,
    closed_form_agrees: bool,
}

pub fn spectrum_json(e: f64, eta: f64, u: &Units) -> Result<String, CliError> {
    let report = spectrum(e, eta, u)?;
    let out = SpectrumOutput {
        units: u.into(),
        closed_form_agrees: report.max_discrepancy <= SPECTRUM_AGREEMENT_TOL,
        report,
    };
    Ok(to_json(&out)?)
}

#[derive(Serialize)]
struct EventsOutput {
    units: UnitsHeader,
    e: f64,
    stable: bool,
    events: Vec<BifurcationEvent>,
}

pub fn events_json(e: f64, u: &Units) -> Result<String, CliError> {
    let out = EventsOutput {
        units: u.into(),
        e,
        stable: bifurcation::stability_flag(e, u)?,
        events: bifurcation::events_at(e, u)?,
    };
    Ok(to_json(&out)?)
}

#[derive(Serialize)]
struct ScanOutput {
    units: UnitsHeader,
    #[serde(flatten)]
    scan: BifurcationScan,
}

pub fn scan_json(grid: &[f64], u: &Units) -> Result<String, CliError> {
    let out = ScanOutput {
        units: u.into(),
        scan: bifurcation::scan(grid, u)?,
    };
    Ok(to_json(&out)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    /// Momentum scalar against eccentricity.
    Mu,
    /// Zero-eigenvalue loci against eccentricity.
    Eta,
}

pub fn figure_csv(which: Figure, grid: &[f64], u: &Units) -> Result<String, CliError> {
    let e_crit = family::critical_eccentricity(u)?;
    let rows = grid
        .par_iter()
        .map(|&e| {
            Ok(match which {
                Figure::Mu => vec![fmt_num(e), fmt_num(mu_hat(e, u)?)],
                Figure::Eta => {
                    let c = coefficients(e, u)?;
                    let eta2 = c.eta2_sq.filter(|_| e < e_crit);
                    vec![fmt_num(e), fmt_num(c.eta1_sq), opt_num(eta2)]
                }
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let header: &[&str] = match which {
        Figure::Mu => &["e", "mu_hat"],
        Figure::Eta => &["e", "eta1_sq", "eta2_sq"],
    };
    Ok(csv_table(u, header, &rows)?)
}

pub fn verify_grid(points: usize) -> Vec<f64> {
    let (lo, hi) = VERIFY_RANGE;
    match points {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        n => (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    units: UnitsHeader,
    passed: bool,
    reports: Vec<OracleReport>,
}

/// Returns the JSON report and whether every check passed.
pub fn verify_json(
    points: usize,
    quad_tol: f64,
    fault: Option<Fault>,
    u: &Units,
) -> Result<(String, bool), CliError> {
    let config = VerifyConfig {
        grid: verify_grid(points),
        quad_tol,
        fault,
    };
    let reports = oracles::run_with(u, &config);
    let passed = oracles::all_passed(&reports);
    let out = VerifyOutput {
        units: u.into(),
        passed,
        reports,
    };
    Ok((to_json(&out)?, passed))
}

/// Parse a principal plane such as `12` or an axis such as `3` (one-based).
pub fn parse_axes_digits(s: &str, count: usize) -> Result<Vec<usize>, CliError> {
    let digits: Vec<usize> = s
        .chars()
        .filter(|c| !matches!(c, ',' | ' '))
        .map(|c| match c.to_digit(10) {
            Some(d @ 1..=3) => Ok(d as usize - 1),
            _ => Err(CliError::Usage(format!(
                "axis index must be 1, 2 or 3 in '{s}'"
            ))),
        })
        .collect::<Result<_, _>>()?;
    if digits.len() != count {
        return Err(CliError::Usage(format!(
            "expected {count} axis index(es) in '{s}'"
        )));
    }
    Ok(digits)
}

pub fn classify(axes: &[f64], plane: Option<&str>, axis: Option<&str>) -> Result<String, CliError> {
    if axes.len() != 3 {
        return Err(CliError::Usage(format!(
            "expected three semi-axes, got {}",
            axes.len()
        )));
    }
    let placement = match (plane, axis) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --plane or --axis".into())),
        (Some(p), None) => {
            let d = parse_axes_digits(p, 2)?;
            Some(Placement::Plane(d[0], d[1]))
        }
        (None, Some(a)) => Some(Placement::Axis(parse_axes_digits(a, 1)?[0])),
        (None, None) => None,
    };
    let class = match placement {
        Some(p) => bifurcation::riemann_class(axes[0], axes[1], axes[2], p)?,
        None => {
            // the placement only matters for triaxial shapes
            let c = bifurcation::riemann_class(axes[0], axes[1], axes[2], Placement::Axis(2))?;
            if c == bifurcation::RiemannClass::SEllipsoid {
                return Err(CliError::Usage(
                    "triaxial shape needs --plane or --axis".into(),
                ));
            }
            c
        }
    };
    Ok(format!("{class}\n"))
}
