//! Initial-value and source-boundary-condition formulations of 1D quantum
//! wave dynamics, and the numerical machinery to compare them.
//!
//! Units are set by [`PhysicalConstants`] (atomic units by default). The probe
//! point of every signal is `x = 0` and the release time is `t = 0`.

pub mod error;
pub mod numerics;
pub mod propagation;
pub mod scattering;
pub mod source;
pub mod states;

pub use error::{Error, Result};
pub use numerics::{Complex, PhysicalConstants};
