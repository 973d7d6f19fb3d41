use thiserror::Error;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{quantity} = {value} is outside the admissible domain {domain}")]
    Domain {
        quantity: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A configuration matrix failed the incompressibility check.
    #[error("configuration determinant {det} differs from 1 by more than {tol:e}")]
    NonUnitDeterminant { det: f64, tol: f64 },

    /// Adaptive quadrature ran out of subdivisions before meeting the tolerance.
    #[error("quadrature did not converge: estimated error {achieved:e} > requested {requested:e} after {intervals} intervals")]
    Quadrature {
        achieved: f64,
        requested: f64,
        intervals: usize,
    },

    /// No sign change was found for a root search.
    #[error("no sign change of {what} found on [{lo}, {hi}]")]
    NoBracket {
        what: &'static str,
        lo: f64,
        hi: f64,
    },

    /// A target value is not attained on the searched interval.
    #[error("{what} = {value} is not attained for eccentricities in [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Generic invalid input that is not a numeric domain violation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_open_unit(quantity: &'static str, e: f64) -> Result<()> {
    if e > 0.0 && e < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            quantity,
            value: e,
            domain: "(0, 1)",
        })
    }
}
