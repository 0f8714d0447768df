//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, PI};
use std::process::ExitCode;
use std::time::Instant;

use double_jc::analysis::{detect_death_default, scan, sweep_alpha, Source};
use double_jc::closed_form::{
    phi_amplitudes, phi_concurrence, phi_reduced_density, psi_amplitudes, psi_concurrence,
    psi_reduced_density,
};
use double_jc::density::DensityMatrix;
use double_jc::numerics::{
    build_hamiltonian, evolve, pair_concurrence, partial_trace_pair, wootters_concurrence,
};
use double_jc::{initial_state_vector, Family, InitialState, ModelParams, SubsystemPair};
use nalgebra::Vector4;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;
use common::{brute_force_concurrence, random_samples, random_state, werner};

type Outcome = Result<(bool, String), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn resonant(big_g: f64) -> ModelParams {
    ModelParams::from_detuning(0.0, big_g, 10.0 * big_g).expect("valid parameters")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn fig1_cos_squared() -> Outcome {
    let big_g = 1.0;
    let p = resonant(big_g);
    let t_max = 4.0 * PI / big_g;
    let mut worst_closed = 0.0_f64;
    let mut worst_oracle = 0.0_f64;
    let mut slowest = 0.0_f64;
    for alpha in [FRAC_PI_8, PI / 6.0, FRAC_PI_4] {
        let init = InitialState::psi(alpha);
        for source in [Source::ClosedForm, Source::Oracle] {
            let start = Instant::now();
            let s = scan(&init, &p, SubsystemPair::AB, t_max, 2001, source, 1).map_err(err)?;
            slowest = slowest.max(start.elapsed().as_secs_f64());
            let e = s
                .times
                .iter()
                .zip(&s.values)
                .map(|(t, c)| (c - (2.0 * alpha).sin().abs() * (big_g * t / 2.0).cos().powi(2)).abs())
                .fold(0.0, f64::max);
            match source {
                Source::ClosedForm => worst_closed = worst_closed.max(e),
                Source::Oracle => worst_oracle = worst_oracle.max(e),
            }
        }
    }
    Ok((
        worst_closed <= 1e-12 && worst_oracle <= 1e-9 && slowest < 1.0,
        format!("closed err {worst_closed:.2e} (≤1e-12), oracle err {worst_oracle:.2e} (≤1e-9), slowest curve {slowest:.3}s (<1s)"),
    ))
}

fn fig2_sudden_death() -> Outcome {
    let alpha = PI / 12.0;
    let p = resonant(1.0);
    let init = InitialState::phi(alpha);
    let expected = (1.6426, 4.6406);
    let mut lines = Vec::new();
    let mut ok = true;
    for source in [Source::ClosedForm, Source::Oracle] {
        let s = scan(&init, &p, SubsystemPair::AB, 4.0 * PI, 2001, source, 1).map_err(err)?;
        let r = detect_death_default(&s).map_err(err)?;
        let Some(&(t0, t1)) = r.dead_intervals.first() else {
            ok = false;
            lines.push(format!("{source:?}: no dead interval"));
            continue;
        };
        let hit = (t0 - expected.0).abs() <= 1e-6 && (t1 - expected.1).abs() <= 1e-6;
        ok &= hit;
        lines.push(format!(
            "{source:?}: endpoints ({t0:.6}, {t1:.6}) vs ({}, {}), sin²(t0/2)/tanα = {:.6}",
            expected.0,
            expected.1,
            (t0 / 2.0).sin().powi(2) / alpha.tan()
        ));
    }
    let closed = phi_concurrence(alpha, &p.constants(), 2.0 * PI);
    let state = evolve(
        &build_hamiltonian(&p, 1).map_err(err)?,
        &initial_state_vector(&init, 1).map_err(err)?,
        2.0 * PI,
    )
    .map_err(err)?;
    let oracle = pair_concurrence(&state, SubsystemPair::AB).map_err(err)?;
    let revival = (closed - 0.5).abs().max((oracle - 0.5).abs());
    ok &= revival <= 1e-9;
    lines.push(format!("revival |C(2π) − 0.5| = {revival:.2e} (≤1e-9)"));
    Ok((ok, lines.join("; ")))
}

fn death_boundary() -> Outcome {
    let boundary = 0.5_f64.atan();
    let (lo, hi) = (PI / 100.0, PI / 2.0);
    let grid: Vec<f64> = (0..50).map(|i| lo + (hi - lo) * i as f64 / 49.0).collect();
    let rows = sweep_alpha(Family::PhiAlpha, &resonant(1.0), &grid, 4.0 * PI, 2001, Source::Oracle)
        .map_err(err)?;
    let mismatches: Vec<f64> = rows
        .iter()
        .filter(|r| r.report.has_death() != (r.alpha < boundary))
        .map(|r| r.alpha)
        .collect();
    let last_dead = rows.iter().filter(|r| r.report.has_death()).map(|r| r.alpha).fold(f64::NAN, f64::max);
    let first_alive = rows.iter().filter(|r| !r.report.has_death()).map(|r| r.alpha).fold(f64::NAN, f64::min);
    Ok((
        mismatches.is_empty(),
        format!(
            "expected boundary {boundary:.6}; observed death up to α = {last_dead:.6}, none from α = {first_alive:.6}; {} of 50 grid points disagree",
            mismatches.len()
        ),
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut worst = [0.0_f64; 3];
    for (family, seed) in [(Family::PsiAlpha, 401), (Family::PhiAlpha, 402)] {
        for s in random_samples(seed, 200) {
            let k = s.params.constants();
            let init = InitialState::named(family, s.alpha);
            let state = evolve(
                &build_hamiltonian(&s.params, 1).map_err(err)?,
                &initial_state_vector(&init, 1).map_err(err)?,
                s.t,
            )
            .map_err(err)?;
            let (amps, rho, c) = match family {
                Family::PsiAlpha => (
                    psi_amplitudes(s.alpha, &k, s.t).to_state(1),
                    psi_reduced_density(s.alpha, &k, s.t),
                    psi_concurrence(s.alpha, &k, s.t),
                ),
                _ => (
                    phi_amplitudes(s.alpha, &k, s.t).to_state(1),
                    phi_reduced_density(s.alpha, &k, s.t),
                    phi_concurrence(s.alpha, &k, s.t),
                ),
            };
            let oracle_rho = partial_trace_pair(&state, SubsystemPair::AB).map_err(err)?;
            let oracle_c = pair_concurrence(&state, SubsystemPair::AB).map_err(err)?;
            worst[0] = worst[0].max(state.max_abs_diff(&amps));
            worst[1] = worst[1].max(oracle_rho.max_abs_diff(&rho));
            worst[2] = worst[2].max((oracle_c - c).abs());
        }
    }
    Ok((
        worst.iter().all(|e| *e <= 1e-9),
        format!(
            "400 samples: amplitude {:.2e}, density {:.2e}, concurrence {:.2e} (≤1e-9)",
            worst[0], worst[1], worst[2]
        ),
    ))
}

fn detuning_floor() -> Outcome {
    let cases = [(FRAC_PI_4, 0.5, 1.0), (PI / 6.0, 1.0, 1.0), (FRAC_PI_8, -0.7, 2.0), (1.2, 2.0, 0.5)];
    let mut worst = 0.0_f64;
    let mut min_seen = f64::INFINITY;
    for (alpha, delta, big_g) in cases {
        let p = ModelParams::from_detuning(delta, big_g, 10.0 * big_g).map_err(err)?;
        let k = p.constants();
        let floor = (2.0 * alpha).sin().abs() * delta * delta / (delta * delta + big_g * big_g);
        for source in [Source::ClosedForm, Source::Oracle] {
            let s = scan(&InitialState::psi(alpha), &p, SubsystemPair::AB, 2.0 * k.period(), 2001, source, 1)
                .map_err(err)?;
            worst = worst.max((s.min() - floor).abs());
            min_seen = min_seen.min(s.min());
        }
    }
    Ok((
        worst <= 1e-9 && min_seen > 0.0,
        format!("max |min C − floor| = {worst:.2e} (≤1e-9), smallest minimum {min_seen:.4} (>0)"),
    ))
}

fn conservation() -> Outcome {
    let mut worst = [0.0_f64; 4];
    let mut invalid = 0usize;
    let mut states = 0usize;
    for (family, seed) in [(Family::PsiAlpha, 601), (Family::PhiAlpha, 602)] {
        for s in random_samples(seed, 100) {
            let init = InitialState::named(family, s.alpha);
            let s0 = initial_state_vector(&init, 1).map_err(err)?;
            let a = evolve(&build_hamiltonian(&s.params, 1).map_err(err)?, &s0, s.t).map_err(err)?;
            let b = evolve(
                &build_hamiltonian(&s.params, 3).map_err(err)?,
                &initial_state_vector(&init, 3).map_err(err)?,
                s.t,
            )
            .map_err(err)?;
            states += 2;
            worst[0] = worst[0].max((a.norm() - 1.0).abs()).max((b.norm() - 1.0).abs());
            worst[1] = worst[1]
                .max((a.mean_excitations() - s0.mean_excitations()).abs())
                .max((b.mean_excitations() - s0.mean_excitations()).abs());
            worst[2] = worst[2].max(b.max_abs_diff(&a.with_cutoff(3).expect("larger cutoff")));
            for pair in SubsystemPair::ALL {
                let ra = partial_trace_pair(&a, pair).map_err(err)?;
                let rb = partial_trace_pair(&b, pair).map_err(err)?;
                invalid += ra.validate().is_err() as usize + rb.validate().is_err() as usize;
                worst[3] = worst[3].max(ra.max_abs_diff(&rb));
            }
        }
    }
    Ok((
        worst.iter().all(|e| *e <= 1e-12) && invalid == 0,
        format!(
            "{states} states: norm {:.2e}, excitations {:.2e}, cutoff 1 vs 3 state {:.2e} / reduced {:.2e} (≤1e-12), {invalid} invalid reduced matrices",
            worst[0], worst[1], worst[2], worst[3]
        ),
    ))
}

fn periodicity() -> Outcome {
    let mut worst = 0.0_f64;
    for (family, seed) in [(Family::PsiAlpha, 701), (Family::PhiAlpha, 702)] {
        for s in random_samples(seed, 10) {
            let period = s.params.constants().period();
            let series = scan(
                &InitialState::named(family, s.alpha),
                &s.params,
                SubsystemPair::AB,
                2.0 * period,
                2001,
                Source::Oracle,
                1,
            )
            .map_err(err)?;
            for i in 0..1000 {
                worst = worst.max((series.values[i] - series.values[i + 1000]).abs());
            }
        }
    }
    let mut shift = 0.0_f64;
    let mut intervals = 0;
    for delta in [0.0, 0.5] {
        let p = ModelParams::from_detuning(delta, 1.0, 10.0).map_err(err)?;
        let period = p.constants().period();
        let s = scan(&InitialState::phi(PI / 12.0), &p, SubsystemPair::AB, 2.0 * period, 2001, Source::Oracle, 1)
            .map_err(err)?;
        let r = detect_death_default(&s).map_err(err)?;
        if r.dead_intervals.len() != 2 {
            return Ok((false, format!("Δ = {delta}: expected two dead intervals, got {:?}", r.dead_intervals)));
        }
        intervals += 2;
        let (a, b) = (r.dead_intervals[0], r.dead_intervals[1]);
        shift = shift.max((b.0 - a.0 - period).abs()).max((b.1 - a.1 - period).abs());
    }
    Ok((
        worst <= 1e-9 && shift <= 1e-9,
        format!("max |C(t+2π/δ) − C(t)| = {worst:.2e}, dead-interval shift error {shift:.2e} over {intervals} intervals (≤1e-9)"),
    ))
}

fn wootters_units() -> Outcome {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let c = |re: f64| Complex64::new(re, 0.0);
    let bells = [
        Vector4::new(c(h), c(0.0), c(0.0), c(h)),
        Vector4::new(c(h), c(0.0), c(0.0), c(-h)),
        Vector4::new(c(0.0), c(h), c(h), c(0.0)),
        Vector4::new(c(0.0), c(h), c(-h), c(0.0)),
    ];
    let mut bell_err = 0.0_f64;
    for v in bells {
        bell_err = bell_err.max((wootters_concurrence(&DensityMatrix::projector(v)).map_err(err)? - 1.0).abs());
    }
    let mut rng = StdRng::seed_from_u64(801);
    let mut product_err = 0.0_f64;
    for _ in 0..100 {
        let mut q = || {
            let (a, b): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let n = (a * a + b * b + x * x + y * y).sqrt();
            [Complex64::new(a, b) / n, Complex64::new(x, y) / n]
        };
        let (u, w) = (q(), q());
        let v = Vector4::new(u[0] * w[0], u[0] * w[1], u[1] * w[0], u[1] * w[1]);
        product_err = product_err.max(wootters_concurrence(&DensityMatrix::projector(v)).map_err(err)?);
    }
    let rho = werner(0.8);
    let oracle = brute_force_concurrence(&rho);
    let werner_err = (wootters_concurrence(&rho).map_err(err)? - 0.7).abs().max((oracle - 0.7).abs());
    // generic mixed states: library against the eigenvalue oracle
    let mut generic = 0.0_f64;
    for i in 0..200 {
        let rho = partial_trace_pair(&random_state(&mut rng), SubsystemPair::ALL[i % 6]).map_err(err)?;
        generic = generic.max((wootters_concurrence(&rho).map_err(err)? - brute_force_concurrence(&rho)).abs());
    }
    Ok((
        bell_err <= 1e-12 && product_err <= 1e-12 && werner_err <= 1e-12 && generic <= 1e-9,
        format!(
            "Bell {bell_err:.2e}, product {product_err:.2e}, Werner p=0.8 {werner_err:.2e} (≤1e-12); random mixed vs eigen oracle {generic:.2e}"
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 resonant Ψ curves", fig1_cos_squared),
        ("2 Φ sudden-death endpoints and revival", fig2_sudden_death),
        ("3 death/no-death boundary at arctan(1/2)", death_boundary),
        ("4 closed form vs oracle", oracle_equivalence),
        ("5 detuning floor", detuning_floor),
        ("6 conservation", conservation),
        ("7 periodicity", periodicity),
        ("8 Wootters units", wootters_units),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let (pass, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        failures += !pass as usize;
        println!("{} criterion {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
