//! Concurrence time series, sudden-death detection, closed-form/oracle
//! validation and initial-angle sweeps.

mod death;
mod series;
mod sweep;
mod validate;

pub use death::{
    death_threshold_alpha, death_threshold_alpha_detuned, detect_death, detect_death_default,
    DeathReport, BISECTION_TOL,
};
pub use series::{scan, scan_pairs, time_grid, ConcurrenceSeries, Oracle, Source};
pub use sweep::{sweep_alpha, AlphaDeath};
pub use validate::{validate, ValidationReport};

use crate::model::{Family, ModelError};
use crate::numerics::{NumericsError, SubsystemPair};

/// Zero threshold for closed-form series; `max{0, f}` yields exact zeros.
pub const CLOSED_FORM_ZERO_TOL: f64 = 1e-12;
/// Zero threshold for oracle series (round-off floor).
pub const ORACLE_ZERO_TOL: f64 = 1e-9;
/// Grid points used when a caller does not specify one.
pub const DEFAULT_STEPS: usize = 2001;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("closed-form concurrence is only available for the atom pair AB (requested {0})")]
    ClosedFormPair(SubsystemPair),
    #[error("closed-form concurrence requires a named initial family (got {0:?})")]
    ClosedFormFamily(Family),
    #[error("validation requires a named family")]
    NamedFamilyRequired,
    #[error("time grid needs at least 2 steps (got {0})")]
    TooFewSteps(usize),
    #[error("t_max must be positive and finite (got {0})")]
    BadTimeSpan(f64),
    #[error("concurrence series is empty")]
    EmptySeries,
    #[error("alpha grid is empty")]
    EmptyAlphaGrid,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
