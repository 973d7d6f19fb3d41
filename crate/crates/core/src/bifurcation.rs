//! Bifurcation events along the MacLaurin family and the classification of
//! the Riemann ellipsoids that branch from it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{self, coefficients};
use crate::normal_form::{
    kernel_basis, locus_eta, stabilizer_of_normal_vector, NormalVector, StabilizerLabel,
    ADJOINT_WINDOW,
};
use crate::numerics::roots;
use crate::symmetry::AlgebraElement;
use crate::units::Units;

/// Lower end of the search interval for the Jacobi–Dedekind point.
pub const JD_SEARCH_START: f64 = 0.05;
/// Relative tolerance for two semi-axes to count as equal.
pub const AXIS_EQUAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BranchType {
    /// Zero eigenvalue of the Arnold block on `𝔮^μ`.
    TypeI,
    /// Zero eigenvalue of the `S × S*` block at `η = ±η₂`.
    TypeS,
    /// `S₂ = 0` at `η = 0`: the point `e_crit`.
    AdjointS,
}

impl BranchType {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::TypeI => "TypeI",
            Self::TypeS => "TypeS",
            Self::AdjointS => "AdjointS",
        }
    }
}

/// Side of a zero-eigenvalue locus `η = ±η_locus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LocusSign {
    Plus,
    Minus,
}

impl LocusSign {
    pub fn apply(&self, magnitude: f64) -> f64 {
        match self {
            Self::Plus => magnitude,
            Self::Minus => -magnitude,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocusSide {
    pub eta: f64,
    /// Velocity `ξ⊥ + η(e₃, e₃)` of the relative equilibrium on the locus.
    pub velocity: AlgebraElement,
    pub kernel: Vec<NormalVector>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BifurcationEvent {
    pub e0: f64,
    pub branch: BranchType,
    /// `|η|` of the locus; zero for the adjoint event.
    pub eta_locus: f64,
    pub sides: Vec<LocusSide>,
    /// Isotropy subgroup of the kernel vectors.
    pub stabilizer: StabilizerLabel,
}

fn event(
    e0: f64,
    branch: BranchType,
    signs: &[LocusSign],
    units: &Units,
) -> Result<BifurcationEvent> {
    let c = coefficients(e0, units)?;
    let point = family::family_point(e0, units)?;
    let mut sides = Vec::with_capacity(signs.len());
    for &sign in signs {
        let eta = locus_eta(&c, branch, sign).ok_or(Error::Domain {
            quantity: "eccentricity",
            value: e0,
            domain: "locus defined",
        })?;
        sides.push(LocusSide {
            eta,
            velocity: point.velocity(eta),
            kernel: kernel_basis(e0, branch, sign, units)?,
        });
    }
    let stabilizer = stabilizer_of_normal_vector(&sides[0].kernel[0]);
    Ok(BifurcationEvent {
        e0,
        branch,
        eta_locus: sides[0].eta.abs(),
        sides,
        stabilizer,
    })
}

/// Every bifurcation event at `e₀`: `TypeI` always, `TypeS` while `S₂ > 0`
/// and `AdjointS` at `e_crit`.
pub fn events_at(e0: f64, units: &Units) -> Result<Vec<BifurcationEvent>> {
    events_with_critical(e0, family::critical_eccentricity(units)?, units)
}

fn events_with_critical(e0: f64, e_crit: f64, units: &Units) -> Result<Vec<BifurcationEvent>> {
    let both = [LocusSign::Plus, LocusSign::Minus];
    let c = coefficients(e0, units)?;
    let at_critical = (e0 - e_crit).abs() <= ADJOINT_WINDOW;
    let mut out = vec![event(e0, BranchType::TypeI, &both, units)?];
    if c.s2 > 0.0 && !at_critical {
        out.push(event(e0, BranchType::TypeS, &both, units)?);
    }
    if at_critical {
        out.push(event(e0, BranchType::AdjointS, &[LocusSign::Plus], units)?);
    }
    Ok(out)
}

/// Spectral stability of the spheroid itself: `S₂ > 0`.
pub fn stability_flag(e: f64, units: &Units) -> Result<bool> {
    Ok(coefficients(e, units)?.s2 > 0.0)
}

/// `Ω² − 4η₂²`, whose root on `(0, e_crit)` is the Jacobi–Dedekind point.
pub fn jacobi_dedekind_gap(e: f64, units: &Units) -> Result<f64> {
    let c = coefficients(e, units)?;
    Ok(c.omega_sq - c.s2 / (2.0 * units.t()))
}

/// Eccentricity where the Jacobi and Dedekind ellipsoids branch off.
pub fn jacobi_dedekind_point(units: &Units) -> Result<f64> {
    let e_crit = family::critical_eccentricity(units)?;
    let g = |e: f64| jacobi_dedekind_gap(e, units).unwrap_or(f64::NAN);
    roots::find_root(
        g,
        JD_SEARCH_START,
        e_crit,
        family::ROOT_SCAN_STEPS,
        family::ROOT_XTOL,
        "Omega^2 - 4 eta2^2",
    )
}

/// One row of a bifurcation scan over eccentricity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocusRow {
    pub e: f64,
    pub eta1: f64,
    /// `None` beyond `e_crit`.
    pub eta2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BifurcationScan {
    pub rows: Vec<LocusRow>,
    pub e_crit: f64,
    pub jacobi_dedekind: f64,
    pub adjoint: BifurcationEvent,
}

pub fn scan(grid: &[f64], units: &Units) -> Result<BifurcationScan> {
    let e_crit = family::critical_eccentricity(units)?;
    let rows = grid
        .iter()
        .map(|&e| {
            let c = coefficients(e, units)?;
            Ok(LocusRow {
                e,
                eta1: c.eta1(),
                eta2: c.eta2().filter(|_| e < e_crit),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BifurcationScan {
        rows,
        e_crit,
        jacobi_dedekind: jacobi_dedekind_point(units)?,
        adjoint: event(e_crit, BranchType::AdjointS, &[LocusSign::Plus], units)?,
    })
}

/// Where the vorticity or angular velocity points relative to the axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Placement {
    /// Vectors in the plane of principal axes `i` and `j` (zero-based).
    Plane(usize, usize),
    /// Vectors along principal axis `k` (zero-based).
    Axis(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RiemannClass {
    Sphere,
    Spheroid,
    /// Triaxial with vectors along a principal axis (Jacobi, Dedekind, S-type).
    SEllipsoid,
    /// `a_k ≥ (a_i + a_j)/2` for the axis `k` normal to the plane.
    TypeI,
    /// `a_k ≤ |a_i − a_j|/2` with `a_k` the middle axis.
    TypeII,
    /// `a_k ≤ |a_i − a_j|/2` with `a_k` the smallest axis.
    TypeIII,
    /// Triaxial, in a principal plane, but none of the inequalities hold.
    Unclassified,
}

impl std::fmt::Display for RiemannClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Sphere => "Sphere-case",
            Self::Spheroid => "Spheroid-case",
            Self::SEllipsoid => "S-ellipsoid-case",
            Self::TypeI => "TypeI",
            Self::TypeII => "TypeII",
            Self::TypeIII => "TypeIII",
            Self::Unclassified => "Unclassified",
        })
    }
}

/// Classify an ellipsoid by its semi-axes and the placement of its vorticity
/// and angular velocity, following Riemann's theorem.
pub fn riemann_class(a1: f64, a2: f64, a3: f64, placement: Placement) -> Result<RiemannClass> {
    let axes = [a1, a2, a3];
    for (i, &a) in axes.iter().enumerate() {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain {
                quantity: ["a1", "a2", "a3"][i],
                value: a,
                domain: "(0, inf)",
            });
        }
    }
    let in_range = |k: usize| -> Result<()> {
        if k > 2 {
            return Err(Error::InvalidInput(format!(
                "axis index {k} out of range 0..3"
            )));
        }
        Ok(())
    };
    match placement {
        Placement::Axis(k) => in_range(k)?,
        Placement::Plane(i, j) => {
            in_range(i)?;
            in_range(j)?;
            if i == j {
                return Err(Error::InvalidInput("plane needs two distinct axes".into()));
            }
        }
    }

    let eq = |x: f64, y: f64| (x - y).abs() <= AXIS_EQUAL_TOL * x.max(y);
    let equal_pairs = [eq(a1, a2), eq(a2, a3), eq(a1, a3)]
        .iter()
        .filter(|&&b| b)
        .count();
    if equal_pairs == 3 {
        return Ok(RiemannClass::Sphere);
    }
    if equal_pairs >= 1 {
        return Ok(RiemannClass::Spheroid);
    }

    let (i, j) = match placement {
        Placement::Axis(_) => return Ok(RiemannClass::SEllipsoid),
        Placement::Plane(i, j) => (i, j),
    };
    let k = 3 - i - j;
    let (ai, aj, ak) = (axes[i], axes[j], axes[k]);
    let longer = usize::from(ai > ak) + usize::from(aj > ak);
    let class = if ak >= 0.5 * (ai + aj) {
        RiemannClass::TypeI
    } else if ak <= 0.5 * (ai - aj).abs() && longer == 1 {
        RiemannClass::TypeII
    } else if ak <= 0.5 * (ai - aj).abs() && longer == 2 {
        RiemannClass::TypeIII
    } else {
        RiemannClass::Unclassified
    };
    Ok(class)
}
