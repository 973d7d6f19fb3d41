//! The ten-dimensional symplectic normal space `N = 𝔮^μ ⊕ S ⊕ S*` at a
//! MacLaurin spheroid, the stability form restricted to it and its spectrum.
//!
//! Coordinates on `N` are ordered `(λ₁, λ₂, λ₃, λ₄ | a₁, a₂, a₃ | β₁, β₂, β₃)`.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Matrix4, SMatrix, SVector};
use serde::Serialize;

use crate::bifurcation::{BranchType, LocusSign};
use crate::error::{Error, Result};
use crate::family::{self, coefficients, CoefficientSet};
use crate::numerics::jacobi::symmetric_eigen;
use crate::units::Units;

pub type Matrix10 = SMatrix<f64, 10, 10>;
pub type Vector10 = SVector<f64, 10>;

/// Relative size below which a numeric eigenvalue counts as zero.
pub const KERNEL_EIGEN_TOL: f64 = 1e-9;
/// Relative tolerance for a vector to count as fixed by a group element.
pub const FIXED_VECTOR_TOL: f64 = 1e-12;
/// `e₀` must lie this close to `e_crit` for the adjoint-S kernel.
pub const ADJOINT_WINDOW: f64 = 1e-9;

/// Element `(λ; a; β)` of the symplectic normal space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalVector {
    pub lambda: [f64; 4],
    pub a: [f64; 3],
    pub beta: [f64; 3],
}

impl NormalVector {
    pub fn zero() -> Self {
        Self {
            lambda: [0.0; 4],
            a: [0.0; 3],
            beta: [0.0; 3],
        }
    }

    pub fn from_lambda(lambda: [f64; 4]) -> Self {
        Self {
            lambda,
            ..Self::zero()
        }
    }

    pub fn from_s(a: [f64; 3], beta: [f64; 3]) -> Self {
        Self {
            a,
            beta,
            ..Self::zero()
        }
    }

    pub fn to_vector(&self) -> Vector10 {
        let mut v = Vector10::zeros();
        v.fixed_rows_mut::<4>(0).copy_from_slice(&self.lambda);
        v.fixed_rows_mut::<3>(4).copy_from_slice(&self.a);
        v.fixed_rows_mut::<3>(7).copy_from_slice(&self.beta);
        v
    }

    pub fn from_vector(v: &Vector10) -> Self {
        Self {
            lambda: [v[0], v[1], v[2], v[3]],
            a: [v[4], v[5], v[6]],
            beta: [v[7], v[8], v[9]],
        }
    }

    pub fn norm(&self) -> f64 {
        self.to_vector().norm()
    }
}

/// Symmetric matrix representing `(a₁, a₂, a₃) ∈ S` at axis ratio `c/a`.
pub fn embed_s(a: [f64; 3], axis_ratio: f64) -> Matrix3<f64> {
    Matrix3::new(
        a[0] + a[1],
        a[2],
        0.0,
        a[2],
        a[0] - a[1],
        0.0,
        0.0,
        0.0,
        -2.0 * axis_ratio * a[0],
    )
}

/// Rotation `θ` of `Õ(2)_{e₃}` acting on `S` (weight two).
pub fn rep_on_s(theta: f64) -> Matrix3<f64> {
    let (s, c) = (2.0 * theta).sin_cos();
    Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c)
}

/// The transposition generator `σ̄` acting on `S`.
pub fn sigma_on_s() -> Matrix3<f64> {
    Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, 1.0, -1.0))
}

/// Rotation `θ` acting on `𝔮^μ` (weight one).
pub fn rep_on_qmu(theta: f64) -> Matrix4<f64> {
    let (s, c) = theta.sin_cos();
    Matrix4::new(
        c, 0.0, -s, 0.0, //
        0.0, c, 0.0, -s, //
        s, 0.0, c, 0.0, //
        0.0, s, 0.0, c,
    )
}

pub fn sigma_on_qmu() -> Matrix4<f64> {
    Matrix4::new(
        0.0, 1.0, 0.0, 0.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, 0.0, 0.0, -1.0, //
        0.0, 0.0, -1.0, 0.0,
    )
}

fn block_diag(q: &Matrix4<f64>, s: &Matrix3<f64>, s_dual: &Matrix3<f64>) -> Matrix10 {
    let mut m = Matrix10::zeros();
    m.fixed_view_mut::<4, 4>(0, 0).copy_from(q);
    m.fixed_view_mut::<3, 3>(4, 4).copy_from(s);
    m.fixed_view_mut::<3, 3>(7, 7).copy_from(s_dual);
    m
}

/// Element of the MacLaurin stabilizer `Õ(2)_{e₃}`: a rotation `θ` or the
/// reflection `σ̄·θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StabilizerElement {
    Rotation(f64),
    Reflection(f64),
}

/// Linear action of a stabilizer element on `N` (`S*` transforms like `S`).
pub fn rep_on_n(el: StabilizerElement) -> Matrix10 {
    match el {
        StabilizerElement::Rotation(theta) => {
            block_diag(&rep_on_qmu(theta), &rep_on_s(theta), &rep_on_s(theta))
        }
        StabilizerElement::Reflection(theta) => {
            let s = sigma_on_s() * rep_on_s(theta);
            block_diag(&(sigma_on_qmu() * rep_on_qmu(theta)), &s, &s)
        }
    }
}

/// Infinitesimal action of `η(e₃, e₃) ∈ 𝔤_z` on `N`.
pub fn generator_on_n(eta: f64) -> Matrix10 {
    let q = Matrix4::new(
        0.0, 0.0, -1.0, 0.0, //
        0.0, 0.0, 0.0, -1.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, 1.0, 0.0, 0.0,
    ) * eta;
    let s = Matrix3::new(0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0) * (2.0 * eta);
    block_diag(&q, &s, &s)
}

fn j2() -> Matrix3<f64> {
    Matrix3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0, 0.0)
}

/// Symplectic matrix `Ω_N`: the scaled `Ξ` block on `𝔮^μ` and the canonical
/// pairing of `S` with `S*`.
pub fn symplectic_matrix(e: f64, units: &Units) -> Result<Matrix10> {
    let c = coefficients(e, units)?;
    let xi = Matrix4::new(
        0.0, 0.0, -1.0, 0.0, //
        0.0, 0.0, 0.0, 1.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, -1.0, 0.0, 0.0,
    ) * (2.0 * c.kappa);
    let mut m = Matrix10::zeros();
    m.fixed_view_mut::<4, 4>(0, 0).copy_from(&xi);
    m.fixed_view_mut::<3, 3>(4, 7)
        .copy_from(&Matrix3::identity());
    m.fixed_view_mut::<3, 3>(7, 4)
        .copy_from(&(-Matrix3::identity()));
    Ok(m)
}

/// Quadratic momentum map `J_N^η(λ; a, β)`.
pub fn momentum_jn(eta: f64, v: &NormalVector, e: f64, units: &Units) -> Result<f64> {
    let kappa = coefficients(e, units)?.kappa;
    let l = &v.lambda;
    Ok(
        kappa * eta * (l[0] * l[0] - l[1] * l[1] + l[2] * l[2] - l[3] * l[3])
            + 2.0 * eta * (v.a[1] * v.beta[2] - v.a[2] * v.beta[1]),
    )
}

/// Exact second derivative of [`momentum_jn`].
pub fn momentum_hessian(e: f64, eta: f64, units: &Units) -> Result<Matrix10> {
    let k = coefficients(e, units)?.kappa;
    let mut m = Matrix10::zeros();
    for (i, sign) in [1.0, -1.0, 1.0, -1.0].iter().enumerate() {
        m[(i, i)] = 2.0 * k * eta * sign;
    }
    m.fixed_view_mut::<3, 3>(4, 7)
        .copy_from(&(j2() * (2.0 * eta)));
    m.fixed_view_mut::<3, 3>(7, 4)
        .copy_from(&(j2() * (-2.0 * eta)));
    Ok(m)
}

fn assemble_hessian(c: &CoefficientSet, eta: f64) -> Matrix10 {
    let shift = c.kappa * eta;
    let mut m = Matrix10::zeros();
    for block in [0, 2] {
        m[(block, block)] = c.a1 - shift;
        m[(block + 1, block + 1)] = c.a1 + shift;
        m[(block, block + 1)] = -c.a2;
        m[(block + 1, block)] = -c.a2;
    }
    m[(4, 4)] = c.s1;
    m[(5, 5)] = c.s2;
    m[(6, 6)] = c.s2;
    for k in 0..3 {
        m[(7 + k, 7 + k)] = 1.0 / c.r1_diag[k];
    }
    m.fixed_view_mut::<3, 3>(4, 7)
        .copy_from(&(j2() * (-2.0 * eta)));
    m.fixed_view_mut::<3, 3>(7, 4)
        .copy_from(&(j2() * (2.0 * eta)));
    m
}

/// Stability form `d²h_{ξ⊥+η}` restricted to `N`.
pub fn hessian_n(e: f64, eta: f64, units: &Units) -> Result<Matrix10> {
    Ok(assemble_hessian(&coefficients(e, units)?, eta))
}

/// Closed-form eigenvalues of the stability form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    /// Arnold-block pair, each of multiplicity two.
    pub sigma1_plus: f64,
    pub sigma1_minus: f64,
    pub sigma2_a: f64,
    pub sigma2_b: f64,
    /// `S × S*` pair, each of multiplicity two.
    pub sigma2_plus: f64,
    pub sigma2_minus: f64,
}

impl ClosedFormSpectrum {
    pub fn from_coefficients(c: &CoefficientSet, eta: f64, units: &Units) -> Self {
        let t = units.t();
        let shift_sq = c.kappa * c.kappa * eta * eta;
        let root1 = (c.a2 * c.a2 + shift_sq).sqrt();
        let sigma1_plus = c.a1 + root1;
        let sigma1_minus = (c.a_diff_sq() - shift_sq) / sigma1_plus;

        let p = 1.0 / (2.0 * t) + c.s2;
        let q = 1.0 / (2.0 * t) - c.s2;
        let sigma2_plus = 0.5 * (p + (q * q + 16.0 * eta * eta).sqrt());
        let sigma2_minus = (c.s2 / (2.0 * t) - 4.0 * eta * eta) / sigma2_plus;

        Self {
            sigma1_plus,
            sigma1_minus,
            sigma2_a: c.s1,
            sigma2_b: 1.0 / (2.0 * t * (3.0 - 2.0 * c.e * c.e)),
            sigma2_plus,
            sigma2_minus,
        }
    }

    /// All ten eigenvalues with multiplicity, ascending.
    pub fn multiset(&self) -> [f64; 10] {
        let mut out = [
            self.sigma1_plus,
            self.sigma1_plus,
            self.sigma1_minus,
            self.sigma1_minus,
            self.sigma2_a,
            self.sigma2_b,
            self.sigma2_plus,
            self.sigma2_plus,
            self.sigma2_minus,
            self.sigma2_minus,
        ];
        out.sort_by(f64::total_cmp);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub e: f64,
    pub eta: f64,
    #[serde(flatten)]
    pub closed_form: ClosedFormSpectrum,
    /// Eigenvalues of the assembled matrix, ascending.
    pub numeric_eigenvalues: Vec<f64>,
    /// Largest gap between the sorted closed-form and numeric multisets.
    pub max_discrepancy: f64,
    /// Eigenvectors of numerically vanishing eigenvalues.
    pub kernel: Vec<NormalVector>,
    /// Whether the spheroid itself (`η = 0`) is stable, i.e. `S₂ > 0`.
    pub stable: bool,
}

fn normalize_sign(v: Vector10) -> Vector10 {
    let pivot = v
        .iter()
        .copied()
        .fold(0.0_f64, |m, x| if x.abs() > m.abs() { x } else { m });
    if pivot < 0.0 {
        -v
    } else {
        v
    }
}

pub fn spectrum(e: f64, eta: f64, units: &Units) -> Result<SpectrumReport> {
    let c = coefficients(e, units)?;
    let h = assemble_hessian(&c, eta);
    let closed_form = ClosedFormSpectrum::from_coefficients(&c, eta, units);
    let eig = symmetric_eigen(&h);

    let numeric: Vec<f64> = eig.values.iter().copied().collect();
    let max_discrepancy = closed_form
        .multiset()
        .iter()
        .zip(&numeric)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let scale = numeric.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let kernel = (0..10)
        .filter(|&i| numeric[i].abs() <= KERNEL_EIGEN_TOL * scale)
        .map(|i| NormalVector::from_vector(&normalize_sign(eig.vectors.column(i).into_owned())))
        .collect();

    Ok(SpectrumReport {
        e,
        eta,
        closed_form,
        numeric_eigenvalues: numeric,
        max_discrepancy,
        kernel,
        stable: c.s2 > 0.0,
    })
}

/// Signed location of the zero-eigenvalue locus of `branch` at `e₀`.
pub fn locus_eta(c: &CoefficientSet, branch: BranchType, sign: LocusSign) -> Option<f64> {
    let magnitude = match branch {
        BranchType::TypeI => Some(c.eta1()),
        BranchType::TypeS => c.eta2().filter(|&v| v > 0.0),
        BranchType::AdjointS => Some(0.0),
    }?;
    Some(sign.apply(magnitude))
}

/// Kernel of the stability form at the `sign` side of the locus of `branch`,
/// in the coordinates of `N`.
///
/// * `TypeI`: `(D, 1, 0, 0)` and `(0, 0, D, 1)` in `𝔮^μ` with
///   `D = (A₁ + κη)/A₂`.
/// * `TypeS`: `a₃ = 1, β₂ = −4Tη` and `a₂ = 1, β₃ = 4Tη`.
/// * `AdjointS`: the `D̃₂`-fixed direction `a₂ = 1` at `e_crit`.
pub fn kernel_basis(
    e0: f64,
    branch: BranchType,
    sign: LocusSign,
    units: &Units,
) -> Result<Vec<NormalVector>> {
    let c = coefficients(e0, units)?;
    match branch {
        BranchType::TypeI => {
            let eta = sign.apply(c.eta1());
            let d = c.d_ratio(eta);
            Ok(vec![
                NormalVector::from_lambda([d, 1.0, 0.0, 0.0]),
                NormalVector::from_lambda([0.0, 0.0, d, 1.0]),
            ])
        }
        BranchType::TypeS => {
            let eta = locus_eta(&c, branch, sign).ok_or(Error::Domain {
                quantity: "eccentricity (type S needs S2 > 0)",
                value: e0,
                domain: "(0, e_crit)",
            })?;
            let w = 4.0 * units.t() * eta;
            Ok(vec![
                NormalVector::from_s([0.0, 0.0, 1.0], [0.0, -w, 0.0]),
                NormalVector::from_s([0.0, 1.0, 0.0], [0.0, 0.0, w]),
            ])
        }
        BranchType::AdjointS => {
            let ec = family::critical_eccentricity(units)?;
            if (e0 - ec).abs() > ADJOINT_WINDOW {
                return Err(Error::Domain {
                    quantity: "eccentricity (adjoint S needs e = e_crit)",
                    value: e0,
                    domain: "{e_crit}",
                });
            }
            Ok(vec![NormalVector::from_s([0.0, 1.0, 0.0], [0.0; 3])])
        }
    }
}

/// `‖H·v‖/‖v‖` for the stability form at `(e, η)`.
pub fn annihilation_ratio(e: f64, eta: f64, v: &NormalVector, units: &Units) -> Result<f64> {
    let h = hessian_n(e, eta, units)?;
    let x = v.to_vector();
    Ok((h * x).norm() / x.norm())
}

/// Isotropy subgroups of `Õ(2)_{e₃}` that occur for vectors of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StabilizerLabel {
    /// The whole group `Õ(2)_{e₃}`.
    FullO2Tilde,
    /// All rotations, no reflection.
    So2Diag,
    /// Rotations by `0` and `π`.
    Z2DiagE3,
    /// Rotations by `0`, `π` and the reflections `σ̄`, `σ̄·π`.
    D2TildeE3,
    /// A single reflection `σ̄·θ`.
    Z2Tilde,
    Trivial,
}

impl StabilizerLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::FullO2Tilde => "FULL_O2_TILDE",
            Self::So2Diag => "SO2_DIAG",
            Self::Z2DiagE3 => "Z2_DIAG_E3",
            Self::D2TildeE3 => "D2_TILDE_E3",
            Self::Z2Tilde => "Z2_TILDE",
            Self::Trivial => "TRIVIAL",
        }
    }

    /// Subgroup containment up to conjugacy: whether `other ⊆ self`.
    pub fn contains(&self, other: StabilizerLabel) -> bool {
        use StabilizerLabel::*;
        if *self == other {
            return true;
        }
        match self {
            FullO2Tilde => true,
            So2Diag => matches!(other, Z2DiagE3 | Trivial),
            D2TildeE3 => matches!(other, Z2DiagE3 | Z2Tilde | Trivial),
            Z2DiagE3 | Z2Tilde => other == Trivial,
            Trivial => false,
        }
    }
}

impl std::fmt::Display for StabilizerLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn fixes(m: &Matrix10, v: &Vector10) -> bool {
    (m * v - v).norm() <= FIXED_VECTOR_TOL * v.norm().max(1.0)
}

const WEIGHT_ONE_PAIRS: [(usize, usize); 2] = [(0, 2), (1, 3)];
const WEIGHT_TWO_PAIRS: [(usize, usize); 2] = [(5, 6), (8, 9)];

/// Angles `θ` for which the reflection `σ̄·θ` could fix `v`, read off from
/// the first rotating coordinate pair that is not zero.
fn reflection_candidates(v: &Vector10) -> Vec<f64> {
    let w = rep_on_n(StabilizerElement::Reflection(0.0)) * v;
    let tol = FIXED_VECTOR_TOL * v.norm().max(1.0);
    let pairs = WEIGHT_ONE_PAIRS
        .iter()
        .map(|p| (p, 1usize))
        .chain(WEIGHT_TWO_PAIRS.iter().map(|p| (p, 2usize)));
    for (&(i, j), weight) in pairs {
        let from = (v[i], v[j]);
        if from.0.hypot(from.1) <= tol {
            continue;
        }
        // σ̄ is an involution, so σ̄·θ fixes v iff rot(θ)·v = σ̄·v.
        let to = (w[i], w[j]);
        let phi = to.1.atan2(to.0) - from.1.atan2(from.0);
        return (0..weight)
            .map(|m| (phi + 2.0 * PI * m as f64) / weight as f64)
            .collect();
    }
    vec![0.0]
}

/// Isotropy subgroup of `v` inside `Õ(2)_{e₃}`, determined from the
/// representation matrices.
pub fn stabilizer_of_normal_vector(v: &NormalVector) -> StabilizerLabel {
    let x = v.to_vector();
    let all_rotations = fixes(&rep_on_n(StabilizerElement::Rotation(1.0)), &x);
    let half_turn = fixes(&rep_on_n(StabilizerElement::Rotation(PI)), &x);
    let reflection = reflection_candidates(&x)
        .into_iter()
        .any(|theta| fixes(&rep_on_n(StabilizerElement::Reflection(theta)), &x));

    match (all_rotations, half_turn, reflection) {
        (true, _, true) => StabilizerLabel::FullO2Tilde,
        (true, _, false) => StabilizerLabel::So2Diag,
        (false, true, true) => StabilizerLabel::D2TildeE3,
        (false, true, false) => StabilizerLabel::Z2DiagE3,
        (false, false, true) => StabilizerLabel::Z2Tilde,
        (false, false, false) => StabilizerLabel::Trivial,
    }
}
