use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Physical constants of the fluid body.
///
/// Only `G` and `rho0` are stored; the kinetic weight `T = 4πρ₀/15` and the
/// potential weight `R = 8π²Gρ₀²/15` are always derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Units {
    g: f64,
    rho0: f64,
}

impl Units {
    pub fn new(g: f64, rho0: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::Domain {
                quantity: "G",
                value: g,
                domain: "(0, inf)",
            });
        }
        if !(rho0.is_finite() && rho0 > 0.0) {
            return Err(Error::Domain {
                quantity: "rho0",
                value: rho0,
                domain: "(0, inf)",
            });
        }
        Ok(Self { g, rho0 })
    }

    pub fn gravitational_constant(&self) -> f64 {
        self.g
    }

    pub fn density(&self) -> f64 {
        self.rho0
    }

    /// Kinetic-metric weight `T = 4πρ₀/15`.
    pub fn t(&self) -> f64 {
        4.0 * PI * self.rho0 / 15.0
    }

    /// Potential weight `R = 8π²Gρ₀²/15`.
    pub fn r(&self) -> f64 {
        8.0 * PI * PI * self.g * self.rho0 * self.rho0 / 15.0
    }

    /// The frequency scale `πGρ₀` in which squared angular velocities are quoted.
    pub fn pi_g_rho(&self) -> f64 {
        PI * self.g * self.rho0
    }
}

impl Default for Units {
    /// `G = 1`, `ρ₀ = 1/π`, so that `πGρ₀ = 1`, `T = 4/15` and `R = 8/15`.
    fn default() -> Self {
        Self {
            g: 1.0,
            rho0: 1.0 / PI,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn default_units_normalize_pi_g_rho() {
        let u = Units::default();
        assert_relative_eq!(u.pi_g_rho(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(u.t(), 4.0 / 15.0, max_relative = 1e-15);
        assert_relative_eq!(u.r(), 8.0 / 15.0, max_relative = 1e-15);
    }

    #[test]
    fn derived_weights_track_inputs() {
        let u = Units::new(2.0, 3.0).unwrap();
        assert_relative_eq!(u.t(), 4.0 * PI * 3.0 / 15.0, max_relative = 1e-15);
        assert_relative_eq!(
            u.r(),
            8.0 * PI * PI * 2.0 * 9.0 / 15.0,
            max_relative = 1e-15
        );
        assert!(u.t() > 0.0 && u.r() > 0.0);
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(Units::new(0.0, 1.0).is_err());
        assert!(Units::new(1.0, -1.0).is_err());
        assert!(Units::new(f64::NAN, 1.0).is_err());
    }
}
