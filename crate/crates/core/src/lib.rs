//! Hamiltonian bifurcation analysis of the MacLaurin family of rotating,
//! self-gravitating fluid spheroids.
//!
//! The crate covers the potential energy of a homogeneous ellipsoid, the
//! `Õ(2)`-extended `SO(3) × SO(3)` symmetry, the MacLaurin relative
//! equilibria and their stability form on the symplectic normal space, the
//! bifurcation catalog, and a suite of independent numerical cross-checks.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // comparisons written so that NaN fails them

pub mod bifurcation;
pub mod error;
pub mod family;
pub mod normal_form;
pub mod numerics;
pub mod oracles;
pub mod potential;
pub mod symmetry;
pub mod units;

pub use bifurcation::{
    events_at, jacobi_dedekind_point, riemann_class, stability_flag, BifurcationEvent, BranchType,
    LocusSign, Placement, RiemannClass,
};
pub use error::{Error, Result};
pub use family::{
    coefficients, critical_eccentricity, family_point, invert_mu, CoefficientSet, FamilyPoint,
};
pub use normal_form::{
    hessian_n, kernel_basis, spectrum, stabilizer_of_normal_vector, NormalVector, SpectrumReport,
    StabilizerLabel,
};
pub use oracles::{run_all, run_with, OracleReport, VerifyConfig};
pub use potential::{potential, spheroid_potential, ConfigMatrix};
pub use symmetry::{AlgebraElement, GroupElement, MomentumPair};
pub use units::Units;
