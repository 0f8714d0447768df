//! Entanglement dynamics of two non-interacting two-level atoms, each held in
//! its own lossless single-mode cavity (the double Jaynes-Cummings model).
//!
//! The crate pairs analytic amplitudes and concurrences ([`closed_form`]) with
//! an independent brute-force oracle ([`numerics`]) and builds time series,
//! sudden-death detection and validation on top of both ([`analysis`]).

pub mod analysis;
pub mod closed_form;
pub mod density;
pub mod model;
pub mod numerics;
pub mod state;

pub use density::{DensityMatrix, PairLabel};
pub use model::{
    derive_constants, initial_state_vector, BasisIndex, Family, InitialState, JcConstants,
    ModelError, ModelParams,
};
pub use numerics::{NumericsError, Subsystem, SubsystemPair};
pub use state::PureState;
