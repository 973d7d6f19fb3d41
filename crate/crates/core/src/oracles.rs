//! Independent cross-checks of every closed form used by the library.
//!
//! Each check pairs a quantity with a reference computed along a different
//! code path: quadrature against closed form, finite differences against the
//! equilibrium condition, a Jacobi eigensolve against closed-form spectra.

use rayon::prelude::*;
use serde::Serialize;

use crate::bifurcation::{self, BranchType, LocusSign};
use crate::error::Result;
use crate::family::{self, coefficients, one_minus_e2};
use crate::normal_form::{
    annihilation_ratio, embed_s, kernel_basis, locus_eta, spectrum, stabilizer_of_normal_vector,
    StabilizerLabel,
};
use crate::potential::{
    self, residual_at, spheroid_potential, trace_metric, ConfigMatrix, DEFAULT_FD_STEP,
    DEFAULT_QUAD_TOL,
};
use crate::symmetry::AlgebraElement;
use crate::units::Units;

pub const GRAM_TOL: f64 = 1e-12;
pub const QUADRATURE_TOL: f64 = 1e-8;
/// Used instead of [`QUADRATURE_TOL`] once `e` exceeds [`FLAT_THRESHOLD`].
pub const QUADRATURE_TOL_FLAT: f64 = 1e-7;
pub const FLAT_THRESHOLD: f64 = 0.98;
pub const IDENTITY_TOL: f64 = 1e-10;
pub const SMALL_E_POINTS: [f64; 3] = [1e-2, 5e-3, 1e-3];
pub const SMALL_E_SPREAD_TOL: f64 = 0.1;
pub const RESIDUAL_TOL: f64 = 1e-6;
/// A wrong velocity must leave at least this residual.
pub const CONTROL_FLOOR: f64 = 1e-3;
pub const CONTROL_E: f64 = 0.5;
pub const CONTROL_SCALE: f64 = 1.1;
pub const SPECTRUM_TOL: f64 = 1e-10;
pub const KERNEL_TOL: f64 = 1e-8;
pub const INVERT_TOL: f64 = 1e-10;
pub const UNIT_INVARIANCE_TOL: f64 = 1e-10;
/// Published critical eccentricity and its tolerance.
pub const CRITICAL_REFERENCE: (f64, f64) = (0.952887, 5e-6);
/// Published Jacobi–Dedekind eccentricity and its tolerance.
pub const JACOBI_DEDEKIND_REFERENCE: (f64, f64) = (0.8126700, 5e-7);
/// Offset either side of `e_crit` where the sign of `S₂` is inspected.
pub const SIGN_PROBE: f64 = 1e-3;
/// Alternative units for the unit-invariance check.
pub const ALT_UNITS: (f64, f64) = (2.5, 0.7);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub grid_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl OracleReport {
    pub fn new(name: &str, max_error: f64, tolerance: f64, grid_size: usize) -> Self {
        Self {
            name: name.to_string(),
            max_error,
            tolerance,
            passed: max_error <= tolerance,
            grid_size,
            warning: None,
        }
    }

    fn empty(name: &str, tolerance: f64) -> Self {
        Self {
            warning: Some("empty grid; check passed vacuously".into()),
            ..Self::new(name, 0.0, tolerance, 0)
        }
    }

    /// Passes iff `value ≥ floor`, reported as `floor/value ≤ 1`.
    fn at_least(name: &str, value: f64, floor: f64, grid_size: usize) -> Self {
        Self::new(name, floor / value, 1.0, grid_size)
    }

    fn with_warning(mut self, w: impl Into<String>) -> Self {
        self.warning = Some(w.into());
        self
    }

    /// Report for a check whose reference evaluation itself failed.
    fn errored(name: &str, tolerance: f64, grid_size: usize, err: &crate::error::Error) -> Self {
        Self::new(name, f64::INFINITY, tolerance, grid_size).with_warning(err.to_string())
    }
}

fn report_or_error(
    name: &str,
    tolerance: f64,
    grid_size: usize,
    r: Result<OracleReport>,
) -> OracleReport {
    r.unwrap_or_else(|e| OracleReport::errored(name, tolerance, grid_size, &e))
}

/// Deliberate corruption used to confirm the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    FlipS2Sign,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub grid: Vec<f64>,
    /// Relative tolerance handed to the potential quadrature.
    pub quad_tol: f64,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid: family::default_grid(),
            quad_tol: DEFAULT_QUAD_TOL,
            fault: None,
        }
    }
}

/// Gram matrix of the `S` basis under the trace metric against `R₁`.
pub fn check_gram_r1(e: f64, units: &Units) -> OracleReport {
    let name = "gram_r1";
    let run = || -> Result<OracleReport> {
        let c = coefficients(e, units)?;
        let ratio = one_minus_e2(e).sqrt();
        let basis = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]].map(|b| embed_s(b, ratio));
        let mut err = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let g = trace_metric(&basis[i], &basis[j], units);
                let expected = if i == j { c.r1_diag[i] } else { 0.0 };
                err = err.max((g - expected).abs() / c.r1_diag[i]);
            }
        }
        Ok(OracleReport::new(name, err, GRAM_TOL, 1))
    };
    report_or_error(name, GRAM_TOL, 1, run())
}

fn gram_over_grid(grid: &[f64], units: &Units) -> OracleReport {
    if grid.is_empty() {
        return OracleReport::empty("gram_r1", GRAM_TOL);
    }
    let err = grid
        .iter()
        .map(|&e| check_gram_r1(e, units).max_error)
        .fold(0.0, f64::max);
    OracleReport::new("gram_r1", err, GRAM_TOL, grid.len())
}

/// Quadrature of the potential against the closed spheroid form, as a
/// maximum relative error. The tolerance relaxes to [`QUADRATURE_TOL_FLAT`]
/// when the grid reaches past [`FLAT_THRESHOLD`].
pub fn check_quadrature_vs_closed(grid: &[f64], units: &Units) -> OracleReport {
    check_quadrature_with_tol(grid, units, DEFAULT_QUAD_TOL)
}

pub fn check_quadrature_with_tol(grid: &[f64], units: &Units, quad_tol: f64) -> OracleReport {
    let flat = grid.iter().any(|&e| e > FLAT_THRESHOLD);
    let (name, tol) = if flat {
        ("quadrature_vs_closed_flat", QUADRATURE_TOL_FLAT)
    } else {
        ("quadrature_vs_closed", QUADRATURE_TOL)
    };
    if grid.is_empty() {
        return OracleReport::empty(name, tol);
    }
    let run = || -> Result<OracleReport> {
        let mut err = 0.0_f64;
        for &e in grid {
            let f = family::config_at(e)?;
            let quad = potential::potential(&f, units, quad_tol)?;
            let closed = spheroid_potential(e, units)?;
            err = err.max(((quad - closed) / closed).abs());
        }
        Ok(OracleReport::new(name, err, tol, grid.len()))
    };
    report_or_error(name, tol, grid.len(), run())
}

/// `V(I) = −2R`.
pub fn check_identity_potential(units: &Units, quad_tol: f64) -> OracleReport {
    let name = "potential_identity";
    let run = || -> Result<OracleReport> {
        let v = potential::potential(&ConfigMatrix::identity(), units, quad_tol)?;
        let expected = -2.0 * units.r();
        Ok(OracleReport::new(
            name,
            ((v - expected) / expected).abs(),
            IDENTITY_TOL,
            1,
        ))
    };
    report_or_error(name, IDENTITY_TOL, 1, run())
}

/// Fourth-order remainder of the MacLaurin condition: the ratio
/// `(Ω²/(πGρ₀) − 8e²/15)/e⁴` must settle to a constant as `e → 0`.
pub fn check_small_e_series(units: &Units) -> OracleReport {
    let name = "small_e_series";
    let run = || -> Result<OracleReport> {
        let ratios = SMALL_E_POINTS
            .iter()
            .map(|&e| {
                let w = family::omega_squared(e, units)? / units.pi_g_rho();
                Ok((w - 8.0 * e * e / 15.0) / e.powi(4))
            })
            .collect::<Result<Vec<f64>>>()?;
        let reference = *ratios.last().unwrap();
        let spread = ratios
            .iter()
            .map(|r| ((r - reference) / reference).abs())
            .fold(0.0, f64::max);
        let report = OracleReport::new(name, spread, SMALL_E_SPREAD_TOL, SMALL_E_POINTS.len());
        Ok(if reference.is_finite() && reference != 0.0 {
            report
        } else {
            OracleReport::new(
                name,
                f64::INFINITY,
                SMALL_E_SPREAD_TOL,
                SMALL_E_POINTS.len(),
            )
        })
    };
    report_or_error(name, SMALL_E_SPREAD_TOL, SMALL_E_POINTS.len(), run())
}

/// Largest relative norm of the constrained gradient of the augmented
/// potential at the MacLaurin points of `grid`.
pub fn check_equilibrium_grid(grid: &[f64], units: &Units) -> OracleReport {
    let name = "equilibrium_residual";
    if grid.is_empty() {
        return OracleReport::empty(name, RESIDUAL_TOL);
    }
    let run = || -> Result<OracleReport> {
        let residuals = grid
            .par_iter()
            .map(|&e| potential::equilibrium_residual(e, units, DEFAULT_FD_STEP))
            .collect::<Result<Vec<f64>>>()?;
        let err = residuals.into_iter().fold(0.0, f64::max);
        Ok(OracleReport::new(name, err, RESIDUAL_TOL, grid.len()))
    };
    report_or_error(name, RESIDUAL_TOL, grid.len(), run())
}

fn residual_with_velocity(
    e: f64,
    units: &Units,
    xi: impl Fn(f64) -> AlgebraElement,
) -> Result<f64> {
    let point = family::family_point(e, units)?;
    residual_at(&point.config, &xi(point.omega), units, DEFAULT_FD_STEP)
}

/// The residual must be large for a velocity off the family.
pub fn check_equilibrium_control(units: &Units) -> OracleReport {
    let name = "equilibrium_control";
    let run = || -> Result<OracleReport> {
        let r = residual_with_velocity(CONTROL_E, units, |omega| {
            AlgebraElement::antidiagonal_e3(0.5 * omega * CONTROL_SCALE)
        })?;
        Ok(OracleReport::at_least(name, r, CONTROL_FLOOR, 1))
    };
    report_or_error(name, 1.0, 1, run())
}

/// The velocity convention with `ξ_L − ξ_R = (Ω/2)e₃` is not an equilibrium.
pub fn check_alternative_convention(units: &Units) -> OracleReport {
    let name = "equilibrium_alternative_convention";
    let run = || -> Result<OracleReport> {
        let r = residual_with_velocity(CONTROL_E, units, |omega| {
            AlgebraElement::antidiagonal_e3(0.25 * omega)
        })?;
        Ok(OracleReport::at_least(name, r, CONTROL_FLOOR, 1)
            .with_warning(format!("residual of the halved convention: {r:.3e}")))
    };
    report_or_error(name, 1.0, 1, run())
}

/// `η` values probed at each grid point: zero, both loci and generic values.
fn eta_probes(e: f64, units: &Units) -> Result<Vec<f64>> {
    let c = coefficients(e, units)?;
    let mut etas = vec![0.0];
    for sign in [LocusSign::Plus, LocusSign::Minus] {
        for branch in [BranchType::TypeI, BranchType::TypeS] {
            if let Some(eta) = locus_eta(&c, branch, sign) {
                etas.push(eta);
            }
        }
        etas.push(sign.apply(0.5 * c.eta1()));
        etas.push(sign.apply(2.0 * c.eta1()));
    }
    Ok(etas)
}

/// Closed-form eigenvalue multiset against a Jacobi eigensolve.
pub fn check_spectrum_grid(grid: &[f64], units: &Units) -> OracleReport {
    let name = "spectrum_equivalence";
    if grid.is_empty() {
        return OracleReport::empty(name, SPECTRUM_TOL);
    }
    let run = || -> Result<OracleReport> {
        let mut err = 0.0_f64;
        let mut count = 0;
        for &e in grid {
            for eta in eta_probes(e, units)? {
                let rep = spectrum(e, eta, units)?;
                for (closed, numeric) in rep
                    .closed_form
                    .multiset()
                    .iter()
                    .zip(&rep.numeric_eigenvalues)
                {
                    err = err.max((closed - numeric).abs() / closed.abs().max(1.0));
                }
                count += 1;
            }
        }
        Ok(OracleReport::new(name, err, SPECTRUM_TOL, count))
    };
    report_or_error(name, SPECTRUM_TOL, grid.len(), run())
}

/// Kernel vectors of every branch are annihilated by the stability form.
pub fn check_kernel_grid(grid: &[f64], units: &Units) -> OracleReport {
    let name = "kernel_annihilation";
    let run = || -> Result<OracleReport> {
        let e_crit = family::critical_eccentricity(units)?;
        let mut err = 0.0_f64;
        let mut count = 0;
        let mut check = |e: f64, branch: BranchType, sign: LocusSign| -> Result<()> {
            let c = coefficients(e, units)?;
            let Some(eta) = locus_eta(&c, branch, sign) else {
                return Ok(());
            };
            for v in kernel_basis(e, branch, sign, units)? {
                err = err.max(annihilation_ratio(e, eta, &v, units)?);
                count += 1;
            }
            Ok(())
        };
        for &e in grid {
            for sign in [LocusSign::Plus, LocusSign::Minus] {
                check(e, BranchType::TypeI, sign)?;
                if e < e_crit {
                    check(e, BranchType::TypeS, sign)?;
                }
            }
        }
        check(e_crit, BranchType::AdjointS, LocusSign::Plus)?;
        Ok(OracleReport::new(name, err, KERNEL_TOL, count))
    };
    report_or_error(name, KERNEL_TOL, grid.len(), run())
}

/// Signs of the non-crossing eigenvalues and of `σ²₋` at `η = 0`.
/// Reports the number of violations.
pub fn check_positivity(grid: &[f64], units: &Units) -> OracleReport {
    let name = "positivity";
    if grid.is_empty() {
        return OracleReport::empty(name, 0.0);
    }
    let run = || -> Result<OracleReport> {
        let e_crit = family::critical_eccentricity(units)?;
        let mut violations = 0usize;
        let mut count = 0;
        for &e in grid {
            for eta in eta_probes(e, units)? {
                let s = spectrum(e, eta, units)?.closed_form;
                let positive = [s.sigma1_plus, s.sigma2_a, s.sigma2_b, s.sigma2_plus];
                violations += positive.iter().filter(|&&x| !(x > 0.0)).count();
                count += 1;
            }
            let s = spectrum(e, 0.0, units)?.closed_form;
            if (s.sigma2_minus < 0.0) != (e > e_crit) {
                violations += 1;
            }
        }
        Ok(OracleReport::new(name, violations as f64, 0.0, count))
    };
    report_or_error(name, 0.0, grid.len(), run())
}

/// `η₁² ≠ η₂²` wherever both exist. Reports violations; the minimum gap goes
/// in the warning field.
pub fn check_loci_separation(grid: &[f64], units: &Units) -> OracleReport {
    let name = "loci_separation";
    let run = || -> Result<OracleReport> {
        let mut min_gap = f64::INFINITY;
        let mut count = 0;
        for &e in grid {
            let c = coefficients(e, units)?;
            if let Some(eta2_sq) = c.eta2_sq.filter(|_| c.s2 > 0.0) {
                min_gap = min_gap.min((c.eta1_sq - eta2_sq).abs());
                count += 1;
            }
        }
        if count == 0 {
            return Ok(OracleReport::empty(name, 0.0));
        }
        let violations = if min_gap > 0.0 { 0.0 } else { 1.0 };
        Ok(OracleReport::new(name, violations, 0.0, count)
            .with_warning(format!("min |eta1^2 - eta2^2| = {min_gap:.6e}")))
    };
    report_or_error(name, 0.0, grid.len(), run())
}

/// `D(η) ≠ 1` on the type I locus, so no reflection fixes its kernel.
pub fn check_d_not_one(grid: &[f64], units: &Units) -> OracleReport {
    let name = "d_not_one";
    if grid.is_empty() {
        return OracleReport::empty(name, 0.0);
    }
    let run = || -> Result<OracleReport> {
        let mut min_gap = f64::INFINITY;
        for &e in grid {
            let c = coefficients(e, units)?;
            for sign in [LocusSign::Plus, LocusSign::Minus] {
                min_gap = min_gap.min(c.d_ratio_minus_one(sign.apply(c.eta1())).abs());
            }
        }
        let violations = if min_gap > 0.0 { 0.0 } else { 1.0 };
        Ok(OracleReport::new(name, violations, 0.0, grid.len())
            .with_warning(format!("min |D - 1| = {min_gap:.6e}")))
    };
    report_or_error(name, 0.0, grid.len(), run())
}

/// Isotropy of the emitted kernels: type I trivial, type S `ℤ₂` diagonal,
/// adjoint S `D̃₂`. Reports the number of mismatches.
pub fn check_stabilizers(grid: &[f64], units: &Units) -> OracleReport {
    let name = "stabilizers";
    let expected = |b: BranchType| match b {
        BranchType::TypeI => StabilizerLabel::Trivial,
        BranchType::TypeS => StabilizerLabel::Z2DiagE3,
        BranchType::AdjointS => StabilizerLabel::D2TildeE3,
    };
    let run = || -> Result<OracleReport> {
        let e_crit = family::critical_eccentricity(units)?;
        let mut mismatches = 0usize;
        let mut count = 0;
        let mut points: Vec<f64> = grid.to_vec();
        points.push(e_crit);
        for e in points {
            for event in bifurcation::events_at(e, units)? {
                for side in &event.sides {
                    for v in &side.kernel {
                        if stabilizer_of_normal_vector(v) != expected(event.branch) {
                            mismatches += 1;
                        }
                        count += 1;
                    }
                }
                if event.stabilizer != expected(event.branch) {
                    mismatches += 1;
                }
            }
        }
        Ok(OracleReport::new(name, mismatches as f64, 0.0, count))
    };
    report_or_error(name, 0.0, grid.len(), run())
}

/// `μ̂` strictly increasing on the grid and unbounded toward `e = 1`;
/// `η₂²` defined exactly below `e_crit`. Reports violations.
pub fn check_figure_data(grid: &[f64], units: &Units) -> OracleReport {
    let name = "figure_data";
    let run = || -> Result<OracleReport> {
        let e_crit = family::critical_eccentricity(units)?;
        let mut violations = 0usize;
        let mut prev = f64::NEG_INFINITY;
        for &e in grid {
            let c = coefficients(e, units)?;
            let mu = family::mu_hat(e, units)?;
            if !(mu > prev) {
                violations += 1;
            }
            prev = mu;
            if c.eta2_sq.is_some() != (e < e_crit) {
                violations += 1;
            }
        }
        // μ̂ grows like (1 − e²)^{−1/12} at the flat end
        let ladder = (2..=12)
            .map(|k| family::mu_hat(1.0 - 10f64.powi(-k), units))
            .collect::<Result<Vec<f64>>>()?;
        violations += ladder.windows(2).filter(|w| !(w[1] > w[0])).count();
        if !(ladder[ladder.len() - 1] > 4.0 * ladder[0]) {
            violations += 1;
        }
        Ok(OracleReport::new(
            name,
            violations as f64,
            0.0,
            grid.len() + ladder.len(),
        ))
    };
    report_or_error(name, 0.0, grid.len(), run())
}

/// Round trip `e → μ̂(e) → e`.
pub fn check_invert_mu(grid: &[f64], units: &Units) -> OracleReport {
    let name = "invert_mu";
    if grid.is_empty() {
        return OracleReport::empty(name, INVERT_TOL);
    }
    let run = || -> Result<OracleReport> {
        let mut err = 0.0_f64;
        for &e in grid {
            let back = family::invert_mu(family::mu_hat(e, units)?, units)?;
            err = err.max((back - e).abs());
        }
        Ok(OracleReport::new(name, err, INVERT_TOL, grid.len()))
    };
    report_or_error(name, INVERT_TOL, grid.len(), run())
}

/// Root of `S₂` against the published value, with the sign pattern
/// `S₂ > 0` below and `S₂ < 0` above.
pub fn check_critical_eccentricity(units: &Units, fault: Option<Fault>) -> OracleReport {
    let name = "critical_eccentricity";
    let (reference, tol) = CRITICAL_REFERENCE;
    let sign = match fault {
        Some(Fault::FlipS2Sign) => -1.0,
        None => 1.0,
    };
    let s2 = |e: f64| sign * family::s2(e, units).unwrap_or(f64::NAN);
    let run = || -> Result<OracleReport> {
        let root = family::critical_eccentricity_of(s2)?;
        let report = OracleReport::new(name, (root - reference).abs(), tol, 1);
        let pattern_ok = s2(root - SIGN_PROBE) > 0.0 && s2(root + SIGN_PROBE) < 0.0;
        Ok(if pattern_ok {
            report
        } else {
            OracleReport::new(name, f64::INFINITY, tol, 1).with_warning(format!(
                "S2 has the wrong sign pattern around its root {root:.9}"
            ))
        })
    };
    report_or_error(name, tol, 1, run())
}

pub fn check_jacobi_dedekind(units: &Units) -> OracleReport {
    let name = "jacobi_dedekind";
    let (reference, tol) = JACOBI_DEDEKIND_REFERENCE;
    let run = || -> Result<OracleReport> {
        let jd = bifurcation::jacobi_dedekind_point(units)?;
        Ok(OracleReport::new(name, (jd - reference).abs(), tol, 1))
    };
    report_or_error(name, tol, 1, run())
}

/// Dimensionless outputs do not depend on `G` and `ρ₀`.
pub fn check_unit_invariance(grid: &[f64], units: &Units) -> OracleReport {
    let name = "unit_invariance";
    let run = || -> Result<OracleReport> {
        let alt = Units::new(ALT_UNITS.0, ALT_UNITS.1)?;
        let rel = |a: f64, b: f64| ((a - b) / a).abs();
        let mut err = rel(
            family::critical_eccentricity(units)?,
            family::critical_eccentricity(&alt)?,
        );
        err = err.max(rel(
            bifurcation::jacobi_dedekind_point(units)?,
            bifurcation::jacobi_dedekind_point(&alt)?,
        ));
        // μ̂ is measured in units of T·(πGρ₀)^{1/2}, η² in units of πGρ₀
        let mu_scale = |u: &Units| u.t() * u.pi_g_rho().sqrt();
        for &e in grid {
            let a = coefficients(e, units)?;
            let b = coefficients(e, &alt)?;
            err = err.max(rel(
                family::mu_hat(e, units)? / mu_scale(units),
                family::mu_hat(e, &alt)? / mu_scale(&alt),
            ));
            err = err.max(rel(
                a.eta1_sq / units.pi_g_rho(),
                b.eta1_sq / alt.pi_g_rho(),
            ));
            if let (Some(x), Some(y)) = (a.eta2_sq, b.eta2_sq) {
                err = err.max(rel(x / units.pi_g_rho(), y / alt.pi_g_rho()));
            }
        }
        Ok(OracleReport::new(
            name,
            err,
            UNIT_INVARIANCE_TOL,
            grid.len() + 2,
        ))
    };
    report_or_error(name, UNIT_INVARIANCE_TOL, grid.len(), run())
}

/// Run every check with the default grid and no fault.
pub fn run_all(units: &Units) -> Vec<OracleReport> {
    run_with(units, &VerifyConfig::default())
}

/// Run every check in parallel; reports are sorted by name.
pub fn run_with(units: &Units, config: &VerifyConfig) -> Vec<OracleReport> {
    let grid = config.grid.as_slice();
    let (regular, flat): (Vec<f64>, Vec<f64>) = grid.iter().partition(|&&e| e <= FLAT_THRESHOLD);
    let fault = config.fault;
    let quad_tol = config.quad_tol;
    type Check<'a> = Box<dyn Fn() -> OracleReport + Send + Sync + 'a>;
    let mut checks: Vec<Check> = vec![
        Box::new(|| gram_over_grid(grid, units)),
        Box::new(|| check_quadrature_with_tol(&regular, units, quad_tol)),
        Box::new(|| check_identity_potential(units, quad_tol)),
        Box::new(|| check_small_e_series(units)),
        Box::new(|| check_equilibrium_grid(grid, units)),
        Box::new(|| check_equilibrium_control(units)),
        Box::new(|| check_alternative_convention(units)),
        Box::new(|| check_spectrum_grid(grid, units)),
        Box::new(|| check_kernel_grid(grid, units)),
        Box::new(|| check_positivity(grid, units)),
        Box::new(|| check_loci_separation(grid, units)),
        Box::new(|| check_d_not_one(grid, units)),
        Box::new(|| check_stabilizers(grid, units)),
        Box::new(|| check_figure_data(grid, units)),
        Box::new(|| check_invert_mu(grid, units)),
        Box::new(move || check_critical_eccentricity(units, fault)),
        Box::new(|| check_jacobi_dedekind(units)),
        Box::new(|| check_unit_invariance(grid, units)),
    ];
    if !flat.is_empty() {
        checks.push(Box::new(|| {
            check_quadrature_with_tol(&flat, units, quad_tol)
        }));
    }
    let mut reports: Vec<OracleReport> = checks.par_iter().map(|c| c()).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

pub fn all_passed(reports: &[OracleReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
