//! The MacLaurin family parametrized by eccentricity: angular velocity,
//! configuration, velocity split, momentum curve and the coefficients of the
//! stability form.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{check_open_unit, Error, Result};
use crate::numerics::roots;
use crate::numerics::series::Series;
use crate::potential::{arcsin_ratio, ConfigMatrix};
use crate::symmetry::AlgebraElement;
use crate::units::Units;

/// Below this eccentricity the coefficient brackets are summed as power
/// series in `e²` instead of evaluated in closed form.
pub const SERIES_SWITCH: f64 = 0.2;
const SERIES_TERMS: usize = 32;

/// Bracket searched for the stability boundary.
pub const CRITICAL_BRACKET: (f64, f64) = (0.9, 0.99);
pub const ROOT_XTOL: f64 = 1e-12;
/// Subintervals scanned for a sign change before Brent refinement.
pub const ROOT_SCAN_STEPS: usize = 16;

/// Eccentricity range searched by [`invert_mu`].
pub const MU_SEARCH: (f64, f64) = (1e-8, 1.0 - 1e-12);

/// `1 − e²` without cancellation near `e = 1`.
pub fn one_minus_e2(e: f64) -> f64 {
    (1.0 - e) * (1.0 + e)
}

struct BracketSeries {
    omega_sq: Series,
    s1: Series,
    s2: Series,
}

fn bracket_series() -> &'static BracketSeries {
    static CELL: OnceLock<BracketSeries> = OnceLock::new();
    CELL.get_or_init(|| {
        let n = SERIES_TERMS;
        let sq = Series::sqrt_one_minus(n);
        let asr = Series::arcsin_ratio(n);
        let sq_asr = &sq * &asr;
        // 2√(1−x)(3−2x)·f − 6(1−x)
        let omega_sq = &Series::poly(&[6.0, -4.0], n) * &sq_asr + Series::poly(&[-6.0, 6.0], n);
        // 9(3−5x+2x²) − √(1−x)(27−36x+8x²)·f
        let s1 = Series::poly(&[27.0, -45.0, 18.0], n)
            + (&Series::poly(&[27.0, -36.0, 8.0], n) * &sq_asr).scale(-1.0);
        // (1−x)(3+4x) − √(1−x)(3+2x−4x²)·f
        let s2 = Series::poly(&[3.0, 1.0, -4.0], n)
            + (&Series::poly(&[3.0, 2.0, -4.0], n) * &sq_asr).scale(-1.0);
        BracketSeries { omega_sq, s1, s2 }
    })
}

/// `Ω²/(πGρ₀) = 2√(1−e²)(3−2e²)arcsin(e)/e³ − 6(1−e²)/e²`.
pub(crate) fn omega_sq_reduced(e: f64) -> f64 {
    let x = e * e;
    if e < SERIES_SWITCH {
        return bracket_series().omega_sq.eval_shifted(x, 2) * x;
    }
    let w = one_minus_e2(e);
    (2.0 * w.sqrt() * (3.0 - 2.0 * x) * arcsin_ratio(e) - 6.0 * w) / x
}

/// `S₁/(2R)`.
pub(crate) fn s1_reduced(e: f64) -> f64 {
    let x = e * e;
    if e < SERIES_SWITCH {
        return bracket_series().s1.eval_shifted(x, 2);
    }
    let w = one_minus_e2(e);
    (9.0 * (3.0 - 5.0 * x + 2.0 * x * x)
        - w.sqrt() * (27.0 - 36.0 * x + 8.0 * x * x) * arcsin_ratio(e))
        / (x * x)
}

/// `S₂/R`.
pub(crate) fn s2_reduced(e: f64) -> f64 {
    let x = e * e;
    if e < SERIES_SWITCH {
        return bracket_series().s2.eval_shifted(x, 2);
    }
    let w = one_minus_e2(e);
    (w * (3.0 + 4.0 * x) - w.sqrt() * (3.0 + 2.0 * x - 4.0 * x * x) * arcsin_ratio(e)) / (x * x)
}

/// Squared angular velocity of the MacLaurin spheroid of eccentricity `e`.
pub fn omega_squared(e: f64, units: &Units) -> Result<f64> {
    check_open_unit("eccentricity", e)?;
    Ok(units.pi_g_rho() * omega_sq_reduced(e))
}

pub fn s1(e: f64, units: &Units) -> Result<f64> {
    check_open_unit("eccentricity", e)?;
    Ok(2.0 * units.r() * s1_reduced(e))
}

pub fn s2(e: f64, units: &Units) -> Result<f64> {
    check_open_unit("eccentricity", e)?;
    Ok(units.r() * s2_reduced(e))
}

/// `μ̂(e) = 2(1−e²)^{−1/3}TΩ(e)`.
pub fn mu_hat(e: f64, units: &Units) -> Result<f64> {
    let omega = omega_squared(e, units)?.sqrt();
    Ok(2.0 * one_minus_e2(e).powf(-1.0 / 3.0) * units.t() * omega)
}

/// A MacLaurin spheroid of eccentricity `e` in its diagonal representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyPoint {
    pub e: f64,
    pub config: ConfigMatrix,
    pub omega: f64,
    /// Velocity `(Ω/2)(e₃, −e₃)` spanning `𝔪`.
    pub xi_perp: AlgebraElement,
    pub mu_hat: f64,
}

impl FamilyPoint {
    /// `ξ⊥ + η(e₃, e₃)`.
    pub fn velocity(&self, eta: f64) -> AlgebraElement {
        self.xi_perp + AlgebraElement::diagonal_e3(eta)
    }

    /// Ratio `c/a = √(1 − e²)` of the semi-axes.
    pub fn axis_ratio(&self) -> f64 {
        one_minus_e2(self.e).sqrt()
    }
}

pub fn config_at(e: f64) -> Result<ConfigMatrix> {
    let w = one_minus_e2(e);
    let a = w.powf(-1.0 / 6.0);
    let c = w.powf(1.0 / 3.0);
    ConfigMatrix::diagonal(a, a, c)
}

pub fn family_point(e: f64, units: &Units) -> Result<FamilyPoint> {
    let omega = omega_squared(e, units)?.sqrt();
    let config = config_at(e)?;
    let mu_hat = 2.0 * one_minus_e2(e).powf(-1.0 / 3.0) * units.t() * omega;
    Ok(FamilyPoint {
        e,
        config,
        omega,
        xi_perp: AlgebraElement::antidiagonal_e3(0.5 * omega),
        mu_hat,
    })
}

/// Eccentricity of the MacLaurin spheroid with momentum `μ̂ = mu_target`.
pub fn invert_mu(mu_target: f64, units: &Units) -> Result<f64> {
    if !(mu_target.is_finite() && mu_target > 0.0) {
        return Err(Error::Domain {
            quantity: "momentum",
            value: mu_target,
            domain: "(0, inf)",
        });
    }
    let (lo, hi) = MU_SEARCH;
    let g = |e: f64| mu_hat(e, units).expect("search interval lies in (0, 1)") - mu_target;
    if g(lo) > 0.0 || g(hi) < 0.0 {
        return Err(Error::OutOfRange {
            what: "momentum",
            value: mu_target,
            lo,
            hi,
        });
    }
    roots::brent(&g, lo, hi, 0.0, "mu_hat(e) - target")
}

/// Stability-form scalars at eccentricity `e`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientSet {
    pub e: f64,
    pub omega_sq: f64,
    pub a1: f64,
    pub a2: f64,
    /// `A₁ − A₂`, evaluated without cancellation.
    pub a1_minus_a2: f64,
    pub s1: f64,
    pub s2: f64,
    pub r1_diag: [f64; 3],
    /// `TΩ(1−e²)^{−1/3}`, the weight of `η` in the Arnold block.
    pub kappa: f64,
    pub eta1_sq: f64,
    /// `S₂/(8T)`; `None` where `S₂ < 0` and no locus exists.
    pub eta2_sq: Option<f64>,
}

impl CoefficientSet {
    pub fn eta1(&self) -> f64 {
        self.eta1_sq.sqrt()
    }

    pub fn eta2(&self) -> Option<f64> {
        self.eta2_sq.map(f64::sqrt)
    }

    /// `A₁² − A₂²`.
    pub fn a_diff_sq(&self) -> f64 {
        self.a1_minus_a2 * (self.a1 + self.a2)
    }

    /// Kernel ratio `D(η) = (A₁ + κη)/A₂` of the Arnold block at `η`.
    pub fn d_ratio(&self, eta: f64) -> f64 {
        (self.a1 + self.kappa * eta) / self.a2
    }

    /// `D(η) − 1` without cancellation.
    pub fn d_ratio_minus_one(&self, eta: f64) -> f64 {
        (self.a1_minus_a2 + self.kappa * eta) / self.a2
    }
}

pub fn coefficients(e: f64, units: &Units) -> Result<CoefficientSet> {
    check_open_unit("eccentricity", e)?;
    let t = units.t();
    let x = e * e;
    let w = one_minus_e2(e);
    let omega_sq = units.pi_g_rho() * omega_sq_reduced(e);
    let a1 = (8.0 - x * x - 4.0 * x) * t * omega_sq / (x * x * w.cbrt());
    let a2 = 8.0 * w.powf(1.0 / 6.0) * t * omega_sq / (x * x);
    let a1_minus_a2 =
        t * omega_sq * x * (8.0 + x) / (w.cbrt() * (8.0 - 4.0 * x - x * x + 8.0 * w.sqrt()));
    let s1 = 2.0 * units.r() * s1_reduced(e);
    let s2 = units.r() * s2_reduced(e);
    let kappa = t * omega_sq.sqrt() / w.cbrt();
    let eta1_sq = a1_minus_a2 * (a1 + a2) * w.powf(2.0 / 3.0) / (t * t * omega_sq);
    let eta2_sq = (s2 >= 0.0).then(|| s2 / (8.0 * t));
    Ok(CoefficientSet {
        e,
        omega_sq,
        a1,
        a2,
        a1_minus_a2,
        s1,
        s2,
        r1_diag: [2.0 * t * (3.0 - 2.0 * x), 2.0 * t, 2.0 * t],
        kappa,
        eta1_sq,
        eta2_sq,
    })
}

/// Root of an `S₂`-like function on [`CRITICAL_BRACKET`].
pub fn critical_eccentricity_of<F: Fn(f64) -> f64>(s2: F) -> Result<f64> {
    let (lo, hi) = CRITICAL_BRACKET;
    roots::find_root(s2, lo, hi, ROOT_SCAN_STEPS, ROOT_XTOL, "S2(e)")
}

/// Eccentricity at which `S₂` vanishes and the family loses stability.
pub fn critical_eccentricity(units: &Units) -> Result<f64> {
    let r = units.r();
    critical_eccentricity_of(|e| r * s2_reduced(e))
}

/// Uniform grid `start, start + step, …` up to `end` inclusive.
pub fn eccentricity_grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    if !(step > 0.0) || end < start {
        return Vec::new();
    }
    let n = ((end - start) / step + 1e-9).floor() as usize + 1;
    (0..n).map(|i| start + step * i as f64).collect()
}

/// Default property grid `0.01, 0.02, …, 0.99`.
pub fn default_grid() -> Vec<f64> {
    (1..=99).map(|i| i as f64 / 100.0).collect()
}
