use super::{detect_death_default, scan, AnalysisError, DeathReport, Source};
use crate::model::{Family, InitialState, ModelParams};
use crate::numerics::SubsystemPair;

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaDeath {
    pub alpha: f64,
    pub report: DeathReport,
}

/// Atom-atom death report for each initial angle in `alpha_grid`.
pub fn sweep_alpha(
    family: Family,
    params: &ModelParams,
    alpha_grid: &[f64],
    t_max: f64,
    steps: usize,
    source: Source,
) -> Result<Vec<AlphaDeath>, AnalysisError> {
    if alpha_grid.is_empty() {
        return Err(AnalysisError::EmptyAlphaGrid);
    }
    if !family.is_named() {
        return Err(AnalysisError::ClosedFormFamily(family));
    }
    alpha_grid
        .iter()
        .map(|&alpha| {
            let init = InitialState::named(family, alpha);
            let series = scan(&init, params, SubsystemPair::AB, t_max, steps, source, 1)?;
            Ok(AlphaDeath {
                alpha,
                report: detect_death_default(&series)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DEFAULT_STEPS;
    use std::f64::consts::PI;

    fn resonant() -> ModelParams {
        ModelParams::from_detuning(0.0, 1.0, 10.0).unwrap()
    }

    #[test]
    fn smaller_alpha_dies_longer() {
        let grid = [PI / 24.0, PI / 16.0, PI / 12.0];
        let rows = sweep_alpha(Family::PhiAlpha, &resonant(), &grid, 4.0 * PI, DEFAULT_STEPS, Source::ClosedForm)
            .unwrap();
        let lengths: Vec<f64> = rows.iter().map(|r| r.report.first_interval_length().unwrap()).collect();
        for (alpha, len) in grid.iter().zip(&lengths) {
            // dead where sin²(t/2) > tan α
            let expect = 2.0 * PI - 4.0 * alpha.tan().sqrt().asin();
            assert!((len - expect).abs() < 1e-9, "{alpha}: {len} vs {expect}");
        }
        assert!(lengths[0] > lengths[1] && lengths[1] > lengths[2]);
    }

    #[test]
    fn psi_never_dies() {
        let grid: Vec<f64> = (0..12).map(|i| 0.05 + i as f64 * 0.13).collect();
        let rows = sweep_alpha(Family::PsiAlpha, &resonant(), &grid, 4.0 * PI, 801, Source::ClosedForm).unwrap();
        assert!(rows.iter().all(|r| !r.report.has_death()));
    }

    #[test]
    fn phi_above_threshold_never_dies() {
        let grid = [0.80, 0.9, 1.0, 1.2, 1.5];
        let rows = sweep_alpha(Family::PhiAlpha, &resonant(), &grid, 4.0 * PI, 801, Source::ClosedForm).unwrap();
        assert!(rows.iter().all(|r| !r.report.has_death()));
    }

    #[test]
    fn rejects_empty_grid() {
        assert_eq!(
            sweep_alpha(Family::PhiAlpha, &resonant(), &[], 1.0, 10, Source::ClosedForm),
            Err(AnalysisError::EmptyAlphaGrid)
        );
    }
}
