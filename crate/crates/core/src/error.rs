use std::fmt;

use crate::propagation::EvolutionRecord;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input outside the domain where the operation is defined
    /// (non-finite numbers, negative times where positive are required, ...).
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// The argument lies exactly on a branch cut or at a branch point.
    #[error("branch error in {op}: {detail}")]
    Branch { op: &'static str, detail: String },

    /// A pole of an analytically continued amplitude was hit.
    #[error("pole encountered in {op} at {at}")]
    Pole { op: &'static str, at: String },

    /// Grid or state geometry is inconsistent (state outside the grid,
    /// unresolved features, non-negligible truncation).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A propagator kernel was evaluated at coincident times.
    #[error("singular kernel in {op}: t == t'")]
    SingularKernel { op: &'static str },

    /// The density reached the edges of the periodic grid.
    #[error(transparent)]
    DomainOverflow(Box<Overflow>),

    /// A reconstruction needed signal values past the end of the record.
    #[error("insufficient record: requested t = {requested}, record ends at {available}")]
    InsufficientRecord { requested: f64, available: f64 },

    /// Inconsistent or missing configuration.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// The request is valid in principle but outside what is implemented.
    #[error("not supported: {0}")]
    NotSupported(String),
}

/// Edge-density overflow raised by a grid evolution. Carries the part of the
/// record that was completed before the run aborted.
pub struct Overflow {
    pub time: f64,
    pub edge_density: f64,
    pub peak_density: f64,
    pub partial: Option<EvolutionRecord>,
}

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edge density {:.3e} exceeds tolerance (peak {:.3e}) at t = {}",
            self.edge_density, self.peak_density, self.time
        )
    }
}

impl fmt::Debug for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Overflow")
            .field("time", &self.time)
            .field("edge_density", &self.edge_density)
            .field("peak_density", &self.peak_density)
            .field("partial_snapshots", &self.partial.as_ref().map(|r| r.snapshots.len()))
            .finish()
    }
}

impl std::error::Error for Overflow {}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn branch(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Branch {
            op,
            detail: detail.into(),
        }
    }

    /// The partial record of an aborted evolution, if any.
    pub fn partial_record(&self) -> Option<&EvolutionRecord> {
        match self {
            Error::DomainOverflow(o) => o.partial.as_ref(),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
