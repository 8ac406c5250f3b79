//! Special functions, branch-correct roots and quadrature rules.

mod branch;
mod faddeeva;
pub(crate) mod fft;
mod quadrature;

pub use branch::{energy_fourth_root, p_plus, p_plus_real, q_of_p};
pub use faddeeva::{erfc, faddeeva_w};
pub use quadrature::{composite_gauss, gauss_legendre};

pub use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};

/// Mass and reduced Planck constant. Defaults to atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub mass: f64,
    pub hbar: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            mass: 1.0,
            hbar: 1.0,
        }
    }
}

impl PhysicalConstants {
    pub fn new(mass: f64, hbar: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0 && hbar.is_finite() && hbar > 0.0) {
            return Err(Error::Configuration(format!(
                "mass and hbar must be positive and finite (got m = {mass}, hbar = {hbar})"
            )));
        }
        Ok(Self { mass, hbar })
    }

    /// Planck constant `2 pi hbar`.
    pub fn h(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.hbar
    }
}
