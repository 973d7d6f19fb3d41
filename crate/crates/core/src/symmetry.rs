//! The symmetry group `ℤ₂ᵀ ⋉ (SO(3) × SO(3))` of Dirichlet's problem: its
//! actions on configurations and on the Lie algebra `ℝ³ ⊕ ℝ³`, fundamental
//! vector fields, the angular momentum / circulation pair and the stabilizer
//! test for relative equilibria.
//!
//! Conventions: `hat(v)w = v × w`; an element `(γ; g, h)` acts by first
//! applying `(g, h)` and then the transposition when `γ = σ`, so
//! `(e; L, R)·F = LFRᵀ` and `(σ; L, R)·F = RFᵀLᵀ`.

use nalgebra::{Matrix3, Rotation3, Unit, Vector3};
use serde::Serialize;

use crate::potential::{trace_metric, ConfigMatrix};
use crate::units::Units;

/// Sign attached to the circulation components of [`momentum_pair`].
///
/// Pinned so that a MacLaurin spheroid has `(j, c) = μ̂(e)(e₃, −e₃)`.
pub const CIRCULATION_SIGN: f64 = 1.0;

/// Default tolerance on matrix norms for [`stabilizer_test`].
pub const STABILIZER_TOL: f64 = 1e-9;

/// Antisymmetric matrix of `v`, so that `hat(v)·w = v × w`.
pub fn hat(v: &Vector3<f64>) -> Matrix3<f64> {
    v.cross_matrix()
}

pub fn rotation(axis: &Vector3<f64>, angle: f64) -> Matrix3<f64> {
    Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle).into_inner()
}

/// Element `(γ; g, h)` of the symmetry group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    /// Whether the transposition `σ` is present.
    pub transposed: bool,
    /// Spatial (left) rotation.
    pub left: Matrix3<f64>,
    /// Body (right) rotation.
    pub right: Matrix3<f64>,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self::rotations(Matrix3::identity(), Matrix3::identity())
    }

    pub fn rotations(left: Matrix3<f64>, right: Matrix3<f64>) -> Self {
        Self {
            transposed: false,
            left,
            right,
        }
    }

    pub fn transposition(left: Matrix3<f64>, right: Matrix3<f64>) -> Self {
        Self {
            transposed: true,
            left,
            right,
        }
    }

    /// Whether both rotation factors are proper orthogonal within `tol`.
    pub fn is_valid(&self, tol: f64) -> bool {
        [self.left, self.right].iter().all(|m| {
            (m.transpose() * m - Matrix3::identity()).norm() <= tol
                && (m.determinant() - 1.0).abs() <= tol
        })
    }

    /// Group product `self · other`.
    ///
    /// Writing `σ·(g, h) = (h, g)`, the product is
    /// `(γγ'; (γ'·(g, h))·(g', h'))`, which makes [`act_config`] and
    /// [`adjoint`] left actions.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let (g, h) = if other.transposed {
            (self.right, self.left)
        } else {
            (self.left, self.right)
        };
        GroupElement {
            transposed: self.transposed ^ other.transposed,
            left: g * other.left,
            right: h * other.right,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let (gi, hi) = (self.left.transpose(), self.right.transpose());
        if self.transposed {
            // (σ; g, h)⁻¹ = (σ; h⁻¹, g⁻¹)
            GroupElement::transposition(hi, gi)
        } else {
            GroupElement::rotations(gi, hi)
        }
    }
}

/// Element `(ξ_L, ξ_R)` of the Lie algebra `ℝ³ ⊕ ℝ³`; also used for
/// momenta after identifying the algebra with its dual by the dot product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlgebraElement {
    /// Spatial angular velocity.
    pub left: Vector3<f64>,
    /// Internal (vorticity) velocity.
    pub right: Vector3<f64>,
}

impl AlgebraElement {
    pub fn new(left: Vector3<f64>, right: Vector3<f64>) -> Self {
        Self { left, right }
    }

    pub fn zero() -> Self {
        Self::new(Vector3::zeros(), Vector3::zeros())
    }

    /// `η·(e₃, e₃)`, the stabilizer direction at a MacLaurin spheroid.
    pub fn diagonal_e3(eta: f64) -> Self {
        Self::new(Vector3::z() * eta, Vector3::z() * eta)
    }

    /// `k·(e₃, −e₃)`, the direction spanning `𝔪`.
    pub fn antidiagonal_e3(k: f64) -> Self {
        Self::new(Vector3::z() * k, -Vector3::z() * k)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.left * s, self.right * s)
    }

    pub fn norm(&self) -> f64 {
        (self.left.norm_squared() + self.right.norm_squared()).sqrt()
    }
}

impl std::ops::Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.left + rhs.left, self.right + rhs.right)
    }
}

impl std::ops::Sub for AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.left - rhs.left, self.right - rhs.right)
    }
}

/// Angular momentum `j` and circulation `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentumPair {
    pub j: Vector3<f64>,
    pub c: Vector3<f64>,
}

impl MomentumPair {
    pub fn as_algebra(&self) -> AlgebraElement {
        AlgebraElement::new(self.j, self.c)
    }
}

/// Raw action on matrices; the determinant is preserved.
pub fn act_matrix(el: &GroupElement, f: &Matrix3<f64>) -> Matrix3<f64> {
    if el.transposed {
        el.right * f.transpose() * el.left.transpose()
    } else {
        el.left * f * el.right.transpose()
    }
}

pub fn act_config(el: &GroupElement, f: &ConfigMatrix) -> ConfigMatrix {
    ConfigMatrix::new(act_matrix(el, f.matrix()))
        .expect("rotations and transposition preserve the determinant")
}

/// `Ad_{(γ; g, h)}(ξ_L, ξ_R) = γ·(gξ_L, hξ_R)`. The coadjoint action
/// `Ad*_{el⁻¹}` on momenta is given by the same formula.
pub fn adjoint(el: &GroupElement, xi: &AlgebraElement) -> AlgebraElement {
    let l = el.left * xi.left;
    let r = el.right * xi.right;
    if el.transposed {
        AlgebraElement::new(r, l)
    } else {
        AlgebraElement::new(l, r)
    }
}

pub fn coadjoint(el: &GroupElement, mu: &MomentumPair) -> MomentumPair {
    let moved = adjoint(el, &mu.as_algebra());
    MomentumPair {
        j: moved.left,
        c: moved.right,
    }
}

fn field_matrix(xi: &AlgebraElement, f: &Matrix3<f64>) -> Matrix3<f64> {
    hat(&xi.left) * f - f * hat(&xi.right)
}

/// Fundamental vector field `ξ_M(F) = hat(ξ_L)F − F·hat(ξ_R)`.
pub fn fundamental_field(xi: &AlgebraElement, f: &ConfigMatrix) -> Matrix3<f64> {
    field_matrix(xi, f.matrix())
}

/// Momentum of the cotangent point `P_F = ⟪ξ_M(F), ·⟫`, paired against the
/// generators `(eᵢ, 0)` and `(0, eᵢ)`.
pub fn momentum_pair(f: &ConfigMatrix, xi: &AlgebraElement, units: &Units) -> MomentumPair {
    let v = fundamental_field(xi, f);
    let mut j = Vector3::zeros();
    let mut c = Vector3::zeros();
    for i in 0..3 {
        let ei = Vector3::ith(i, 1.0);
        let left = field_matrix(&AlgebraElement::new(ei, Vector3::zeros()), f.matrix());
        let right = field_matrix(&AlgebraElement::new(Vector3::zeros(), ei), f.matrix());
        j[i] = trace_metric(&v, &left, units);
        c[i] = CIRCULATION_SIGN * trace_metric(&v, &right, units);
    }
    MomentumPair { j, c }
}

/// Whether `el` belongs to the stabilizer of the relative equilibrium with
/// configuration `F` and velocity `ξ`: it must fix `F`, and `Ad_el ξ − ξ`
/// must generate no motion of `F`.
pub fn stabilizer_test(el: &GroupElement, f: &ConfigMatrix, xi: &AlgebraElement, tol: f64) -> bool {
    let fixes_config = (act_matrix(el, f.matrix()) - f.matrix()).norm() <= tol;
    if !fixes_config {
        return false;
    }
    let drift = adjoint(el, xi) - *xi;
    fundamental_field(&drift, f).norm() <= tol
}

/// Generators of the MacLaurin stabilizer `Õ(2)_{e₃}` sampled at the given
/// rotation angles and in-plane reflection axes.
pub fn maclaurin_stabilizer_samples() -> Vec<GroupElement> {
    let mut out = Vec::new();
    for theta in [0.3, 1.0, 2.5, std::f64::consts::PI] {
        let r = rotation(&Vector3::z(), theta);
        out.push(GroupElement::rotations(r, r));
    }
    for phi in [0.0_f64, 0.7, 2.0] {
        let n = Vector3::new(phi.cos(), phi.sin(), 0.0);
        let r = rotation(&n, std::f64::consts::PI);
        out.push(GroupElement::transposition(r, r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::family_point;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn sample_config() -> ConfigMatrix {
        let m: Matrix3<f64> = Matrix3::new(1.2, 0.3, -0.1, 0.0, 0.9, 0.4, 0.2, -0.5, 1.0);
        let d = m.determinant();
        ConfigMatrix::new(m / d.cbrt()).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let f = sample_config();
        assert_eq!(act_config(&GroupElement::identity(), &f), f);
        let xi = AlgebraElement::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(-1.0, 0.5, 0.0));
        assert_eq!(adjoint(&GroupElement::identity(), &xi), xi);
    }

    #[test]
    fn bare_transposition_fixes_diagonal() {
        let f = ConfigMatrix::diagonal(2.0, 1.0, 0.5).unwrap();
        let sigma = GroupElement::transposition(Matrix3::identity(), Matrix3::identity());
        assert_eq!(act_config(&sigma, &f), f);
    }

    #[test]
    fn action_preserves_singular_values() {
        let f = sample_config();
        let el = GroupElement::rotations(
            rotation(&Vector3::new(1.0, 2.0, 0.5), 0.8),
            rotation(&Vector3::new(-0.3, 0.1, 1.0), 2.1),
        );
        let g = act_config(&el, &f);
        let s1 = f.matrix().singular_values();
        let s2 = g.matrix().singular_values();
        let mut a: Vec<f64> = s1.iter().copied().collect();
        let mut b: Vec<f64> = s2.iter().copied().collect();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&b) {
            assert_relative_eq!(x, y, max_relative = 1e-13);
        }
    }

    #[test]
    fn transposition_swaps_algebra_components() {
        let sigma = GroupElement::transposition(Matrix3::identity(), Matrix3::identity());
        let xi = AlgebraElement::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(4.0, 5.0, 6.0));
        let out = adjoint(&sigma, &xi);
        assert_eq!(out.left, xi.right);
        assert_eq!(out.right, xi.left);
    }

    #[test]
    fn axis_rotation_fixes_its_axis() {
        let r = rotation(&Vector3::z(), 0.77);
        let el = GroupElement::rotations(r, r);
        let xi = AlgebraElement::diagonal_e3(1.0);
        let out = adjoint(&el, &xi);
        assert!((out - xi).norm() < 1e-15);
    }

    #[test]
    fn hat_map_convention() {
        let xi = AlgebraElement::new(Vector3::z(), Vector3::zeros());
        let field = fundamental_field(&xi, &ConfigMatrix::identity());
        let want = Matrix3::new(0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(field, want);
        let v = Vector3::new(0.2, -0.7, 1.1);
        let w = Vector3::new(-1.0, 0.4, 0.3);
        assert!((hat(&v) * w - v.cross(&w)).norm() < 1e-15);
    }

    #[test]
    fn diagonal_pair_does_not_move_identity() {
        let v = Vector3::new(0.3, 0.4, -2.0);
        let field = fundamental_field(&AlgebraElement::new(v, v), &ConfigMatrix::identity());
        assert_eq!(field, Matrix3::zeros());
    }

    #[test]
    fn fields_are_tangent_to_unit_determinant() {
        let f = sample_config();
        let xi = AlgebraElement::new(Vector3::new(0.5, -1.0, 2.0), Vector3::new(1.5, 0.2, -0.4));
        let field = fundamental_field(&xi, &f);
        let inv = f.matrix().try_inverse().unwrap();
        assert!((inv * field).trace().abs() < 1e-12);
    }

    #[test]
    fn maclaurin_momentum_pair_and_circulation_sign() {
        let u = Units::default();
        let p = family_point(0.5, &u).unwrap();
        let mu = momentum_pair(&p.config, &p.xi_perp, &u);
        assert_relative_eq!(mu.j.z, p.mu_hat, max_relative = 1e-13);
        assert_relative_eq!(mu.c.z, -p.mu_hat, max_relative = 1e-13);
        assert!(mu.j.xy().norm() < 1e-15 && mu.c.xy().norm() < 1e-15);
        assert_relative_eq!(p.mu_hat, 0.218059249220041, max_relative = 1e-12);
        assert_eq!(CIRCULATION_SIGN, 1.0);
    }

    #[test]
    fn zero_velocity_has_zero_momentum() {
        let u = Units::default();
        let mu = momentum_pair(&sample_config(), &AlgebraElement::zero(), &u);
        assert_eq!(mu.j, Vector3::zeros());
        assert_eq!(mu.c, Vector3::zeros());
    }

    #[test]
    fn maclaurin_stabilizer_members() {
        let u = Units::default();
        let p = family_point(0.5, &u).unwrap();
        for el in maclaurin_stabilizer_samples() {
            assert!(stabilizer_test(&el, &p.config, &p.xi_perp, STABILIZER_TOL));
        }
        let flip = GroupElement::rotations(rotation(&Vector3::x(), PI), Matrix3::identity());
        assert!(!stabilizer_test(
            &flip,
            &p.config,
            &p.xi_perp,
            STABILIZER_TOL
        ));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let el = GroupElement::transposition(
            rotation(&Vector3::new(1.0, 0.0, 1.0), 0.4),
            rotation(&Vector3::new(0.0, 1.0, 1.0), 1.3),
        );
        let id = el.compose(&el.inverse());
        assert!(!id.transposed);
        assert!((id.left - Matrix3::identity()).norm() < 1e-14);
        assert!((id.right - Matrix3::identity()).norm() < 1e-14);
        assert!(el.is_valid(1e-12));
    }
}
