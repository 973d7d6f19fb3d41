//! Randomized structural invariants.

use std::f64::consts::PI;

use maclaurin_core::bifurcation::{BranchType, LocusSign};
use maclaurin_core::family::{coefficients, mu_hat};
use maclaurin_core::normal_form::{
    generator_on_n, hessian_n, kernel_basis, momentum_hessian, momentum_jn, rep_on_n, spectrum,
    symplectic_matrix, NormalVector, StabilizerElement, Vector10,
};
use maclaurin_core::potential::potential;
use maclaurin_core::symmetry::{
    act_config, adjoint, coadjoint, momentum_pair, rotation, AlgebraElement, GroupElement,
};
use maclaurin_core::{ConfigMatrix, Units};
use nalgebra::{Matrix3, Vector3};
use proptest::prelude::*;

fn vec3() -> impl Strategy<Value = Vector3<f64>> {
    prop::array::uniform3(-2.0..2.0f64).prop_map(Vector3::from)
}

fn rot() -> impl Strategy<Value = Matrix3<f64>> {
    (prop::array::uniform3(-1.0..1.0f64), -PI..PI).prop_filter_map("degenerate axis", |(a, t)| {
        let axis = Vector3::from(a);
        (axis.norm() > 1e-3).then(|| rotation(&axis, t))
    })
}

fn group_element() -> impl Strategy<Value = GroupElement> {
    (any::<bool>(), rot(), rot()).prop_map(|(transposed, left, right)| GroupElement {
        transposed,
        left,
        right,
    })
}

fn config() -> impl Strategy<Value = ConfigMatrix> {
    prop::array::uniform9(-1.0..1.0f64).prop_filter_map("near singular", |a| {
        let m = Matrix3::from_row_slice(&a) + Matrix3::identity() * 1.5;
        let d: f64 = m.determinant();
        (d > 0.2).then(|| ConfigMatrix::new(m / d.cbrt()).unwrap())
    })
}

fn algebra() -> impl Strategy<Value = AlgebraElement> {
    (vec3(), vec3()).prop_map(|(l, r)| AlgebraElement::new(l, r))
}

fn normal_vector() -> impl Strategy<Value = NormalVector> {
    prop::array::uniform10(-1.0..1.0f64).prop_map(|a| NormalVector::from_vector(&Vector10::from(a)))
}

fn close(a: &Matrix3<f64>, b: &Matrix3<f64>, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn potential_invariant_under_rotations_and_transpose(f in config(), l in rot(), r in rot()) {
        let u = Units::default();
        let tol = 1e-10;
        let v = potential(&f, &u, tol).unwrap();
        let moved = ConfigMatrix::new(l * f.matrix() * r.transpose()).unwrap();
        let transposed = ConfigMatrix::new(f.matrix().transpose()).unwrap();
        for w in [potential(&moved, &u, tol).unwrap(), potential(&transposed, &u, tol).unwrap()] {
            prop_assert!((w - v).abs() <= 2.0 * tol * v.abs());
        }
        prop_assert!(v < 0.0);
    }

    #[test]
    fn configuration_action_composes(a in group_element(), b in group_element(), f in config()) {
        let lhs = act_config(&a, &act_config(&b, &f));
        let rhs = act_config(&a.compose(&b), &f);
        prop_assert!(close(lhs.matrix(), rhs.matrix(), 1e-12));
    }

    #[test]
    fn adjoint_is_a_representation(a in group_element(), b in group_element(), xi in algebra()) {
        let lhs = adjoint(&a, &adjoint(&b, &xi));
        let rhs = adjoint(&a.compose(&b), &xi);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + xi.norm()));
        let back = adjoint(&a.inverse(), &adjoint(&a, &xi));
        prop_assert!((back - xi).norm() <= 1e-12 * (1.0 + xi.norm()));
    }

    #[test]
    fn momentum_is_linear(f in config(), x in algebra(), y in algebra(), s in -3.0..3.0f64) {
        let u = Units::default();
        let combined = momentum_pair(&f, &(x + y.scale(s)), &u);
        let mx = momentum_pair(&f, &x, &u);
        let my = momentum_pair(&f, &y, &u);
        let scale = 1.0 + mx.j.norm() + my.j.norm() + mx.c.norm() + my.c.norm();
        prop_assert!((combined.j - (mx.j + my.j * s)).norm() <= 1e-12 * scale);
        prop_assert!((combined.c - (mx.c + my.c * s)).norm() <= 1e-12 * scale);
    }

    #[test]
    fn momentum_is_equivariant(g in group_element(), f in config(), xi in algebra()) {
        let u = Units::default();
        let moved = momentum_pair(&act_config(&g, &f), &adjoint(&g, &xi), &u);
        let expected = coadjoint(&g, &momentum_pair(&f, &xi, &u));
        let scale = 1.0 + expected.j.norm() + expected.c.norm();
        prop_assert!((moved.j - expected.j).norm() <= 1e-11 * scale);
        prop_assert!((moved.c - expected.c).norm() <= 1e-11 * scale);
    }

    #[test]
    fn quadratic_momentum_matches_its_hessian(e in 0.02..0.98f64, eta in -3.0..3.0f64, v in normal_vector()) {
        let u = Units::default();
        let x = v.to_vector();
        let m = momentum_hessian(e, eta, &u).unwrap();
        let jn = momentum_jn(eta, &v, e, &u).unwrap();
        prop_assert!((0.5 * x.dot(&(m * x)) - jn).abs() <= 1e-12 * (1.0 + jn.abs()));
        // J_N is generated by the stabilizer action through Ω_N
        let omega = symplectic_matrix(e, &u).unwrap();
        let gen = generator_on_n(eta);
        let from_action = 0.5 * (gen * x).dot(&(omega * x));
        prop_assert!((from_action - jn).abs() <= 1e-12 * (1.0 + jn.abs()));
    }

    #[test]
    fn closed_form_spectrum_matches_eigensolve(e in 0.01..0.99f64, eta in -4.0..4.0f64) {
        let rep = spectrum(e, eta, &Units::default()).unwrap();
        for (c, n) in rep.closed_form.multiset().iter().zip(&rep.numeric_eigenvalues) {
            prop_assert!((c - n).abs() <= 1e-10 * c.abs().max(1.0), "{c} vs {n}");
        }
    }

    #[test]
    fn hessian_is_stabilizer_equivariant(e in 0.02..0.98f64, eta in -3.0..3.0f64, theta in -PI..PI) {
        let u = Units::default();
        let h = hessian_n(e, eta, &u).unwrap();
        let r = rep_on_n(StabilizerElement::Rotation(theta));
        prop_assert!((r.transpose() * h * r - h).norm() <= 1e-12 * h.norm());
        // reflections reverse the direction of η(e₃, e₃)
        let s = rep_on_n(StabilizerElement::Reflection(theta));
        let h_rev = hessian_n(e, -eta, &u).unwrap();
        prop_assert!((s.transpose() * h * s - h_rev).norm() <= 1e-12 * h.norm());
    }

    #[test]
    fn normal_representation_is_a_homomorphism(a in -PI..PI, b in -PI..PI) {
        let ra = rep_on_n(StabilizerElement::Rotation(a));
        let rb = rep_on_n(StabilizerElement::Rotation(b));
        let rab = rep_on_n(StabilizerElement::Rotation(a + b));
        prop_assert!((ra * rb - rab).norm() < 1e-13);
        let s = rep_on_n(StabilizerElement::Reflection(0.0));
        let conj = s * ra * s;
        prop_assert!((conj - rep_on_n(StabilizerElement::Rotation(-a))).norm() < 1e-13);
    }

    #[test]
    fn generator_is_derivative_of_rotation(eta in -2.0..2.0f64) {
        let h = 1e-6;
        let plus = rep_on_n(StabilizerElement::Rotation(h * eta));
        let minus = rep_on_n(StabilizerElement::Rotation(-h * eta));
        let fd = (plus - minus) / (2.0 * h);
        prop_assert!((fd - generator_on_n(eta)).norm() < 1e-8);
    }
}

#[test]
fn structural_symmetry_of_forms() {
    let u = Units::default();
    for e in [0.1, 0.5, 0.9, 0.97] {
        for eta in [0.0, 0.7, -1.3] {
            let h = hessian_n(e, eta, &u).unwrap();
            assert_eq!(h, h.transpose());
            for i in 0..4 {
                for j in 4..10 {
                    assert_eq!(h[(i, j)], 0.0);
                    assert_eq!(h[(j, i)], 0.0);
                }
            }
        }
        let o = symplectic_matrix(e, &u).unwrap();
        assert_eq!(o, -o.transpose());
        for i in 0..4 {
            for j in 4..10 {
                assert_eq!(o[(i, j)], 0.0);
            }
        }
    }
}

#[test]
fn kernels_rotate_with_their_weight() {
    let u = Units::default();
    let half = rep_on_n(StabilizerElement::Rotation(PI));
    let full = rep_on_n(StabilizerElement::Rotation(2.0 * PI));
    let quarter = rep_on_n(StabilizerElement::Rotation(PI / 2.0));
    for e in [0.2, 0.5, 0.9] {
        for v in kernel_basis(e, BranchType::TypeS, LocusSign::Plus, &u).unwrap() {
            let x = v.to_vector();
            assert!((half * x - x).norm() < 1e-12);
            assert!((quarter * x - x).norm() > 0.5);
        }
        for v in kernel_basis(e, BranchType::TypeI, LocusSign::Minus, &u).unwrap() {
            let x = v.to_vector();
            assert!((half * x + x).norm() < 1e-12);
            assert!((full * x - x).norm() < 1e-12);
        }
    }
}

#[test]
fn zero_eigenvalues_on_loci() {
    let u = Units::default();
    for k in 1..=99 {
        let e = k as f64 / 100.0;
        let c = coefficients(e, &u).unwrap();
        let s = spectrum(e, c.eta1(), &u).unwrap().closed_form;
        assert!(s.sigma1_minus.abs() <= 1e-9 * s.sigma1_plus, "e = {e}");
        if let Some(eta2) = c.eta2().filter(|_| c.s2 > 0.0) {
            let s = spectrum(e, eta2, &u).unwrap().closed_form;
            assert!(s.sigma2_minus.abs() <= 1e-9, "e = {e}");
        }
    }
}

#[test]
fn crossing_eigenvalues_change_sign_across_loci() {
    // The block determinants are squares of 2x2 minors, so the sign change
    // shows up in the crossing eigenvalue itself.
    let u = Units::default();
    for k in 1..=99 {
        let e = k as f64 / 100.0;
        let c = coefficients(e, &u).unwrap();
        let below = spectrum(e, 0.9 * c.eta1(), &u)
            .unwrap()
            .closed_form
            .sigma1_minus;
        let above = spectrum(e, 1.1 * c.eta1(), &u)
            .unwrap()
            .closed_form
            .sigma1_minus;
        assert!(below > 0.0 && above < 0.0, "e = {e}");
        if let Some(eta2) = c.eta2().filter(|_| c.s2 > 0.0) {
            let below = spectrum(e, 0.9 * eta2, &u)
                .unwrap()
                .closed_form
                .sigma2_minus;
            let above = spectrum(e, 1.1 * eta2, &u)
                .unwrap()
                .closed_form
                .sigma2_minus;
            assert!(below > 0.0 && above < 0.0, "e = {e}");
        }
    }
}

#[test]
fn coefficient_orderings_on_grid() {
    let u = Units::default();
    for k in 1..=99 {
        let e = k as f64 / 100.0;
        let c = coefficients(e, &u).unwrap();
        assert!(c.a1 > c.a2 && c.a2 > 0.0 && c.a1_minus_a2 > 0.0, "e = {e}");
        assert!(c.eta1_sq > 0.0, "e = {e}");
    }
}

#[test]
fn mu_hat_strictly_increasing_on_fine_grid() {
    let u = Units::default();
    let mut prev = 0.0;
    for k in 1..10_000 {
        let mu = mu_hat(k as f64 / 10_000.0, &u).unwrap();
        assert!(mu > prev, "k = {k}");
        prev = mu;
    }
}
