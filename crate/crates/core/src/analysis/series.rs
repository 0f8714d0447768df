use rayon::prelude::*;

use super::AnalysisError;
use crate::closed_form::{phi_concurrence, psi_concurrence};
use crate::model::{initial_state_vector, Family, InitialState, JcConstants, ModelParams};
use crate::numerics::{
    build_hamiltonian, pair_concurrence, pair_signed_concurrence, NumericsError, Propagator,
    SubsystemPair,
};
use crate::state::PureState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    ClosedForm,
    Oracle,
}

/// Exact propagation of one initial state under the full Hamiltonian.
#[derive(Debug, Clone)]
pub struct Oracle {
    propagator: Propagator,
    state0: PureState,
}

impl Oracle {
    pub fn new(init: &InitialState, params: &ModelParams, cutoff: usize) -> Result<Self, AnalysisError> {
        let h = build_hamiltonian(params, cutoff)?;
        Ok(Self {
            propagator: Propagator::new(&h),
            state0: initial_state_vector(init, cutoff)?,
        })
    }

    pub fn state_at(&self, t: f64) -> Result<PureState, NumericsError> {
        self.propagator.evolve(&self.state0, t)
    }

    pub fn concurrence(&self, pair: SubsystemPair, t: f64) -> Result<f64, NumericsError> {
        pair_concurrence(&self.state_at(t)?, pair)
    }

    pub fn signed_concurrence(&self, pair: SubsystemPair, t: f64) -> Result<f64, NumericsError> {
        pair_signed_concurrence(&self.state_at(t)?, pair)
    }
}

/// Concurrence of one subsystem pair on a time grid, with the inputs that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceSeries {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub pair: SubsystemPair,
    pub source: Source,
    pub init: InitialState,
    pub params: ModelParams,
    pub cutoff: usize,
}

impl ConcurrenceSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Grid spacing (uniform grids only).
    pub fn resolution(&self) -> f64 {
        match self.times.len() {
            0 | 1 => 0.0,
            n => (self.times[n - 1] - self.times[0]) / (n - 1) as f64,
        }
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// `steps` uniformly spaced times over `[0, t_max]`, endpoints included.
pub fn time_grid(t_max: f64, steps: usize) -> Result<Vec<f64>, AnalysisError> {
    if steps < 2 {
        return Err(AnalysisError::TooFewSteps(steps));
    }
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(AnalysisError::BadTimeSpan(t_max));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|i| t_max * i as f64 / last).collect())
}

type ClosedForm = fn(f64, &JcConstants, f64) -> f64;

fn closed_form_fn(init: &InitialState, pair: SubsystemPair) -> Result<ClosedForm, AnalysisError> {
    if pair != SubsystemPair::AB {
        return Err(AnalysisError::ClosedFormPair(pair));
    }
    match init.family {
        Family::PsiAlpha => Ok(psi_concurrence),
        Family::PhiAlpha => Ok(phi_concurrence),
        Family::Custom => Err(AnalysisError::ClosedFormFamily(Family::Custom)),
    }
}

/// Concurrence of `pair` over `[0, t_max]` from the closed form or the oracle.
pub fn scan(
    init: &InitialState,
    params: &ModelParams,
    pair: SubsystemPair,
    t_max: f64,
    steps: usize,
    source: Source,
    cutoff: usize,
) -> Result<ConcurrenceSeries, AnalysisError> {
    Ok(scan_pairs(init, params, &[pair], t_max, steps, source, cutoff)?
        .pop()
        .expect("one pair requested"))
}

/// Like [`scan`] for several pairs; oracle states are evolved once per time.
pub fn scan_pairs(
    init: &InitialState,
    params: &ModelParams,
    pairs: &[SubsystemPair],
    t_max: f64,
    steps: usize,
    source: Source,
    cutoff: usize,
) -> Result<Vec<ConcurrenceSeries>, AnalysisError> {
    let times = time_grid(t_max, steps)?;
    let columns: Vec<Vec<f64>> = match source {
        Source::ClosedForm => {
            let k = params.constants();
            pairs
                .iter()
                .map(|&pair| {
                    let f = closed_form_fn(init, pair)?;
                    Ok(times.par_iter().map(|&t| f(init.alpha, &k, t)).collect())
                })
                .collect::<Result<_, AnalysisError>>()?
        }
        Source::Oracle => {
            let oracle = Oracle::new(init, params, cutoff)?;
            let rows: Vec<Vec<f64>> = times
                .par_iter()
                .map(|&t| {
                    let state = oracle.state_at(t)?;
                    pairs
                        .iter()
                        .map(|&pair| pair_concurrence(&state, pair))
                        .collect::<Result<Vec<f64>, NumericsError>>()
                })
                .collect::<Result<_, NumericsError>>()?;
            (0..pairs.len())
                .map(|c| rows.iter().map(|r| r[c]).collect())
                .collect()
        }
    };
    Ok(pairs
        .iter()
        .zip(columns)
        .map(|(&pair, values)| ConcurrenceSeries {
            times: times.clone(),
            values,
            pair,
            source,
            init: init.clone(),
            params: *params,
            cutoff,
        })
        .collect())
}
