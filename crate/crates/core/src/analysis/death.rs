use std::f64::consts::FRAC_PI_4;

use super::{AnalysisError, ConcurrenceSeries, Oracle, Source, CLOSED_FORM_ZERO_TOL, ORACLE_ZERO_TOL};
use crate::closed_form::{phi_f, psi_concurrence};
use crate::model::{Family, JcConstants};

/// Time resolution of the bisection that refines dead-interval endpoints.
pub const BISECTION_TOL: f64 = 1e-10;

/// Zero-concurrence structure of a series.
#[derive(Debug, Clone, PartialEq)]
pub struct DeathReport {
    /// Finite intervals with `C = 0` throughout, sorted and disjoint.
    pub dead_intervals: Vec<(f64, f64)>,
    /// Isolated grid times where `C` touches zero.
    pub touch_points: Vec<f64>,
    /// Revival period `2π/δ`.
    pub period: f64,
    pub initial_concurrence: f64,
}

impl DeathReport {
    pub fn has_death(&self) -> bool {
        !self.dead_intervals.is_empty()
    }

    pub fn first_interval_length(&self) -> Option<f64> {
        self.dead_intervals.first().map(|(a, b)| b - a)
    }
}

/// Critical initial angle of the Φ family at zero detuning: a finite dead
/// interval appears iff `α < π/4` (`tan α < 1`).
///
/// At resonance the pre-concurrence is
/// `cos²(Gt/2) [|sin 2α| − 2 sin²(Gt/2) cos²α]`, whose bracket can turn
/// negative only when `|sin 2α| < 2 cos²α`. At `α = π/4` the bracket and the
/// prefactor vanish together at `Gt = π`, giving an isolated touch.
pub fn death_threshold_alpha() -> f64 {
    FRAC_PI_4
}

/// Critical angle for arbitrary detuning, `arctan(4N²)`; reduces to
/// [`death_threshold_alpha`] when `Δ = 0`.
pub fn death_threshold_alpha_detuned(k: &JcConstants) -> f64 {
    (4.0 * k.n_coef * k.n_coef).atan()
}

/// [`detect_death`] with the zero threshold matched to the series source.
pub fn detect_death_default(series: &ConcurrenceSeries) -> Result<DeathReport, AnalysisError> {
    let tol = match series.source {
        Source::ClosedForm => CLOSED_FORM_ZERO_TOL,
        Source::Oracle => ORACLE_ZERO_TOL,
    };
    detect_death(series, tol)
}

/// Classifies the zero runs of `series` into dead intervals and touch points.
///
/// A run of grid values `≤ zero_tol` is a dead interval when it spans at
/// least two grid intervals and the signed pre-concurrence (`phi_f` for the
/// closed-form Φ family, the unclamped Wootters value for oracle series) is
/// below `−zero_tol` inside it. Interval endpoints are located by bisection on
/// the sign of that generator to [`BISECTION_TOL`]. Any other run yields one
/// touch point at its smallest value.
pub fn detect_death(series: &ConcurrenceSeries, zero_tol: f64) -> Result<DeathReport, AnalysisError> {
    if series.is_empty() {
        return Err(AnalysisError::EmptySeries);
    }
    let k = series.params.constants();
    let generator = signed_generator(series, k)?;
    let times = &series.times;
    let values = &series.values;
    let n = times.len();

    let mut dead_intervals = Vec::new();
    let mut touch_points = Vec::new();
    let mut i = 0;
    while i < n {
        if values[i] > zero_tol {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < n && values[i + 1] <= zero_tol {
            i += 1;
        }
        let end = i;
        i += 1;

        let signs: Vec<f64> = if end - start >= 2 {
            (start..=end)
                .map(|j| generator(times[j]))
                .collect::<Result<_, _>>()?
        } else {
            Vec::new()
        };
        let negative: Vec<usize> = signs
            .iter()
            .enumerate()
            .filter(|(_, g)| **g < -zero_tol)
            .map(|(j, _)| start + j)
            .collect();
        match (negative.first(), negative.last()) {
            (Some(&first), Some(&last)) => {
                let t0 = if start == 0 {
                    times[0]
                } else {
                    bisect(&generator, times[first - 1], times[first])?
                };
                let t1 = if end + 1 == n {
                    times[n - 1]
                } else {
                    bisect(&generator, times[last + 1], times[last])?
                };
                dead_intervals.push((t0, t1));
            }
            _ => {
                let j = (start..=end)
                    .min_by(|a, b| values[*a].total_cmp(&values[*b]))
                    .expect("non-empty run");
                touch_points.push(times[j]);
            }
        }
    }

    Ok(DeathReport {
        dead_intervals,
        touch_points,
        period: k.period(),
        initial_concurrence: values[0],
    })
}

type Generator<'a> = Box<dyn Fn(f64) -> Result<f64, AnalysisError> + 'a>;

fn signed_generator(series: &ConcurrenceSeries, k: JcConstants) -> Result<Generator<'_>, AnalysisError> {
    let alpha = series.init.alpha;
    Ok(match (series.source, series.init.family) {
        (Source::ClosedForm, Family::PhiAlpha) => Box::new(move |t| Ok(phi_f(alpha, &k, t))),
        (Source::ClosedForm, Family::PsiAlpha) => Box::new(move |t| Ok(psi_concurrence(alpha, &k, t))),
        (Source::ClosedForm, Family::Custom) => {
            return Err(AnalysisError::ClosedFormFamily(Family::Custom))
        }
        (Source::Oracle, _) => {
            let oracle = Oracle::new(&series.init, &series.params, series.cutoff)?;
            let pair = series.pair;
            Box::new(move |t| Ok(oracle.signed_concurrence(pair, t)?))
        }
    })
}

/// Boundary between `alive` (generator ≥ 0) and `dead` (generator < 0).
fn bisect(generator: &Generator<'_>, mut alive: f64, mut dead: f64) -> Result<f64, AnalysisError> {
    while (dead - alive).abs() > BISECTION_TOL {
        let mid = 0.5 * (alive + dead);
        if generator(mid)? < 0.0 {
            dead = mid;
        } else {
            alive = mid;
        }
    }
    Ok(0.5 * (alive + dead))
}
