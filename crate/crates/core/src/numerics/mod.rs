//! Brute-force oracle: the full double Jaynes-Cummings Hamiltonian on the
//! truncated tensor space, exact propagation, partial traces over any pair
//! of subsystems, and the Wootters concurrence of arbitrary two-qubit states.

mod hamiltonian;
mod partial_trace;
mod propagate;
mod wootters;

pub use hamiltonian::{build_hamiltonian, excitation_operator, HermitianOperator};
pub use partial_trace::{
    pair_concurrence, pair_signed_concurrence, partial_trace_pair, Subsystem, SubsystemPair,
    QUBIT_LEAKAGE_TOL,
};
pub use propagate::{evolve, Propagator};
pub use wootters::{
    spin_flip, wootters_concurrence, wootters_signed, wootters_signed_factor, RANK_TOL,
};

use crate::density::DensityError;
use crate::model::ModelError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("operator is not Hermitian (max |H - H†| = {0:e})")]
    NotHermitian(f64),
    #[error("operator dimension {operator} does not match state dimension {state}")]
    DimensionMismatch { operator: usize, state: usize },
    #[error(
        "{subsystem} holds population {population:e} above one photon; \
         it cannot be treated as a qubit"
    )]
    QubitEquivalence {
        subsystem: Subsystem,
        population: f64,
    },
    #[error("invalid density matrix: {0}")]
    Density(#[from] DensityError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
