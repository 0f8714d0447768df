use rayon::prelude::*;

use super::{time_grid, AnalysisError, Oracle};
use crate::closed_form::{
    phi_amplitudes, phi_concurrence, phi_reduced_density, psi_amplitudes, psi_concurrence,
    psi_reduced_density,
};
use crate::model::{Family, InitialState, ModelParams};
use crate::numerics::{pair_concurrence, partial_trace_pair, SubsystemPair};

/// Largest closed-form/oracle discrepancy over a time grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub max_abs_error: f64,
    pub worst_time: f64,
    pub samples: usize,
    pub pass: bool,
    pub tolerance: f64,
    /// Worst entrywise error of the full state vector, phase included.
    pub amplitude_error: f64,
    /// Worst entrywise error of the atom-atom reduced matrix.
    pub density_error: f64,
    pub concurrence_error: f64,
}

#[derive(Clone, Copy)]
struct Sample {
    t: f64,
    amplitude: f64,
    density: f64,
    concurrence: f64,
}

impl Sample {
    fn worst(&self) -> f64 {
        self.amplitude.max(self.density).max(self.concurrence)
    }
}

/// Compares the closed-form amplitudes, reduced matrices and concurrences
/// against exact propagation of the full Hamiltonian at `cutoff`.
pub fn validate(
    init: &InitialState,
    params: &ModelParams,
    t_max: f64,
    steps: usize,
    tolerance: f64,
    cutoff: usize,
) -> Result<ValidationReport, AnalysisError> {
    if !init.family.is_named() {
        return Err(AnalysisError::NamedFamilyRequired);
    }
    let times = time_grid(t_max, steps)?;
    let oracle = Oracle::new(init, params, cutoff)?;
    let k = params.constants();
    let alpha = init.alpha;

    let samples: Vec<Sample> = times
        .par_iter()
        .map(|&t| {
            let state = oracle.state_at(t)?;
            let (closed_state, closed_rho, closed_c) = match init.family {
                Family::PsiAlpha => (
                    psi_amplitudes(alpha, &k, t).to_state(cutoff),
                    psi_reduced_density(alpha, &k, t),
                    psi_concurrence(alpha, &k, t),
                ),
                _ => (
                    phi_amplitudes(alpha, &k, t).to_state(cutoff),
                    phi_reduced_density(alpha, &k, t),
                    phi_concurrence(alpha, &k, t),
                ),
            };
            let rho = partial_trace_pair(&state, SubsystemPair::AB)?;
            let c = pair_concurrence(&state, SubsystemPair::AB)?;
            Ok(Sample {
                t,
                amplitude: state.max_abs_diff(&closed_state),
                density: rho.max_abs_diff(&closed_rho),
                concurrence: (c - closed_c).abs(),
            })
        })
        .collect::<Result<_, AnalysisError>>()?;

    let worst = samples
        .iter()
        .copied()
        .reduce(|a, b| if b.worst() > a.worst() { b } else { a })
        .expect("grid has at least two points");
    let max_of = |f: fn(&Sample) -> f64| samples.iter().map(f).fold(0.0, f64::max);
    let max_abs_error = worst.worst();
    Ok(ValidationReport {
        max_abs_error,
        worst_time: worst.t,
        samples: samples.len(),
        pass: max_abs_error <= tolerance,
        tolerance,
        amplitude_error: max_of(|s| s.amplitude),
        density_error: max_of(|s| s.density),
        concurrence_error: max_of(|s| s.concurrence),
    })
}
