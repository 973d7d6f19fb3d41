//! Gravitational potential of a homogeneous incompressible ellipsoid viewed
//! as a function on unit-determinant 3×3 matrices.

use nalgebra::Matrix3;
use serde::Serialize;

use crate::error::{check_open_unit, Error, Result};
use crate::family::{self, one_minus_e2};
use crate::numerics::quadrature;
use crate::symmetry::{fundamental_field, AlgebraElement};
use crate::units::Units;

/// Allowed deviation of `det F` from 1.
pub const DET_TOL: f64 = 1e-12;
/// Default relative tolerance for the potential quadrature.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
/// Quadrature tolerance used inside finite-difference gradients.
pub const GRADIENT_QUAD_TOL: f64 = 1e-13;
/// Default central-difference step.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// A configuration of the fluid body: a 3×3 matrix with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigMatrix(Matrix3<f64>);

impl ConfigMatrix {
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let det = m.determinant();
        if !det.is_finite() || (det - 1.0).abs() > DET_TOL {
            return Err(Error::NonUnitDeterminant { det, tol: DET_TOL });
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    pub fn diagonal(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(Matrix3::from_diagonal(&nalgebra::Vector3::new(a, b, c)))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix3<f64> {
        self.0
    }
}

impl AsRef<Matrix3<f64>> for ConfigMatrix {
    fn as_ref(&self) -> &Matrix3<f64> {
        &self.0
    }
}

/// The two nontrivial symmetric functions of the eigenvalues of `FFᵀ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Invariants {
    pub i1: f64,
    pub i2: f64,
}

pub fn invariants(f: &ConfigMatrix) -> Invariants {
    let c = f.0 * f.0.transpose();
    let tr = c.trace();
    let tr2 = (c * c).trace();
    Invariants {
        i1: tr,
        i2: 0.5 * (tr * tr - tr2),
    }
}

/// Integrand of `∫₀^∞ ds/√(s³ + I₁s² + I₂s + 1)` after `s = (t/(1−t))²`.
///
/// The substitution clears the denominators exactly, leaving a bounded smooth
/// function on `[0, 1]` with value 2 at `t = 1`.
fn mapped_integrand(inv: Invariants, t: f64) -> f64 {
    let u = 1.0 - t;
    let t2 = t * t;
    let u2 = u * u;
    let cubic = t2 * t2 * t2 + inv.i1 * t2 * t2 * u2 + inv.i2 * t2 * u2 * u2 + u2 * u2 * u2;
    2.0 * t / cubic.sqrt()
}

/// `V(F) = −R ∫₀^∞ ds/√(s³ + I₁s² + I₂s + 1)` to relative accuracy `tol`.
pub fn potential(f: &ConfigMatrix, units: &Units, tol: f64) -> Result<f64> {
    if !(tol > 0.0 && tol <= 1e-4) {
        return Err(Error::Domain {
            quantity: "quadrature tolerance",
            value: tol,
            domain: "(0, 1e-4]",
        });
    }
    let inv = invariants(f);
    let q = quadrature::integrate(|t| mapped_integrand(inv, t), 0.0, 1.0, tol)?;
    Ok(-units.r() * q.value)
}

/// `arcsin(e)/e`, with its Taylor series below `1e-4`.
pub(crate) fn arcsin_ratio(e: f64) -> f64 {
    if e < 1e-4 {
        let x = e * e;
        1.0 + x * (1.0 / 6.0 + x * (3.0 / 40.0 + x * (5.0 / 112.0 + x * 35.0 / 1152.0)))
    } else {
        e.asin() / e
    }
}

/// Closed form of the potential on the spheroid `F(e)`:
/// `−2R(1−e²)^{1/6}·arcsin(e)/e`.
pub fn spheroid_potential(e: f64, units: &Units) -> Result<f64> {
    if !(0.0..1.0).contains(&e) {
        return Err(Error::Domain {
            quantity: "eccentricity",
            value: e,
            domain: "[0, 1)",
        });
    }
    Ok(-2.0 * units.r() * one_minus_e2(e).powf(1.0 / 6.0) * arcsin_ratio(e))
}

/// Kinetic metric `⟪A, B⟫ = T·tr(AᵀB)`.
pub fn trace_metric(a: &Matrix3<f64>, b: &Matrix3<f64>, units: &Units) -> f64 {
    units.t() * (a.transpose() * b).trace()
}

pub fn augmented_potential_with_tol(
    f: &ConfigMatrix,
    xi: &AlgebraElement,
    units: &Units,
    tol: f64,
) -> Result<f64> {
    let v = potential(f, units, tol)?;
    let field = fundamental_field(xi, f);
    Ok(v - 0.5 * trace_metric(&field, &field, units))
}

/// `V(F) − ½⟪ξ_M(F), ξ_M(F)⟫`; its critical points on SL(3) are the
/// configurations of relative equilibria with velocity `ξ`.
pub fn augmented_potential(f: &ConfigMatrix, xi: &AlgebraElement, units: &Units) -> Result<f64> {
    augmented_potential_with_tol(f, xi, units, DEFAULT_QUAD_TOL)
}

/// Orthonormal (Frobenius) basis of traceless 3×3 matrices.
pub fn traceless_basis() -> [Matrix3<f64>; 8] {
    let mut basis = [Matrix3::zeros(); 8];
    let mut k = 0;
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                basis[k][(i, j)] = 1.0;
                k += 1;
            }
        }
    }
    basis[6] = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, -1.0, 0.0)) / 2f64.sqrt();
    basis[7] = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, 1.0, -2.0)) / 6f64.sqrt();
    basis
}

/// Gradient of the augmented potential at `F` along the curves `F·exp(tX)`
/// for the traceless basis, by central differences with one Richardson step.
pub fn augmented_gradient(
    f: &ConfigMatrix,
    xi: &AlgebraElement,
    units: &Units,
    h: f64,
) -> Result<[f64; 8]> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain {
            quantity: "finite-difference step",
            value: h,
            domain: "(0, inf)",
        });
    }
    let eval = |x: &Matrix3<f64>, t: f64| -> Result<f64> {
        let moved = ConfigMatrix::new(f.0 * (x * t).exp())?;
        augmented_potential_with_tol(&moved, xi, units, GRADIENT_QUAD_TOL)
    };
    let mut grad = [0.0; 8];
    for (g, x) in grad.iter_mut().zip(traceless_basis().iter()) {
        let d_h = (eval(x, h)? - eval(x, -h)?) / (2.0 * h);
        let d_h2 = (eval(x, 0.5 * h)? - eval(x, -0.5 * h)?) / h;
        *g = (4.0 * d_h2 - d_h) / 3.0;
    }
    Ok(grad)
}

/// Normalized gradient norm `‖∇(V − ½⟪ξ_M, ξ_M⟫)‖ / |V|` at `F` for velocity `ξ`.
pub fn residual_at(f: &ConfigMatrix, xi: &AlgebraElement, units: &Units, h: f64) -> Result<f64> {
    let grad = augmented_gradient(f, xi, units, h)?;
    let norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
    let v = potential(f, units, GRADIENT_QUAD_TOL)?;
    Ok(norm / v.abs())
}

/// Relative-equilibrium residual of the MacLaurin point of eccentricity `e`
/// with velocity `ξ⊥(e) = (Ω/2)(e₃, −e₃)`.
pub fn equilibrium_residual(e: f64, units: &Units, h: f64) -> Result<f64> {
    check_open_unit("eccentricity", e)?;
    let point = family::family_point(e, units)?;
    residual_at(&point.config, &point.xi_perp, units, h)
}
