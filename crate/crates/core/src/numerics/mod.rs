//! Numerical building blocks shared by the physics modules.

pub mod jacobi;
pub mod quadrature;
pub mod roots;
pub mod series;
