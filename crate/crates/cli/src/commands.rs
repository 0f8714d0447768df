use double_jc::analysis::{self, detect_death_default, scan_pairs, sweep_alpha, DeathReport};
use double_jc::Family;
use serde::Serialize;

use crate::args::{Format, RunConfig};
use crate::error::CliError;
use crate::output::{self, emit, num, Echo};

#[derive(Serialize)]
struct Constants {
    omega: f64,
    nu: f64,
    g: f64,
    delta: f64,
    #[serde(rename = "G")]
    big_g: f64,
    rabi: f64,
    lambda_plus: f64,
    lambda_minus: f64,
    #[serde(rename = "L")]
    l: f64,
    #[serde(rename = "M")]
    m: f64,
    #[serde(rename = "N")]
    n: f64,
    period: f64,
}

pub fn constants(cfg: &RunConfig) -> Result<(), CliError> {
    let k = cfg.params.constants();
    let c = Constants {
        omega: cfg.params.omega(),
        nu: cfg.params.nu(),
        g: cfg.params.g(),
        delta: k.delta,
        big_g: k.big_g,
        rabi: k.rabi,
        lambda_plus: k.lambda_plus,
        lambda_minus: k.lambda_minus,
        l: k.l_coef,
        m: k.m_coef,
        n: k.n_coef,
        period: k.period(),
    };
    let text = match cfg.format {
        Format::Json => output::to_json(&c)?,
        Format::Csv => {
            let rows = [
                ("omega", c.omega),
                ("nu", c.nu),
                ("g", c.g),
                ("delta", c.delta),
                ("G", c.big_g),
                ("rabi", c.rabi),
                ("lambda_plus", c.lambda_plus),
                ("lambda_minus", c.lambda_minus),
                ("L", c.l),
                ("M", c.m),
                ("N", c.n),
                ("period", c.period),
            ];
            let mut s = String::from("key,value\n");
            for (key, v) in rows {
                s.push_str(&format!("{key},{}\n", num(v)));
            }
            s
        }
    };
    emit(cfg.out.as_deref(), &text)
}

pub fn scan(cfg: &RunConfig) -> Result<(), CliError> {
    let init = cfg.initial_state()?;
    let series = scan_pairs(&init, &cfg.params, &cfg.pairs, cfg.t_max, cfg.steps, cfg.source, cfg.cutoff)?;
    let echo = Echo::new(cfg);
    let text = match cfg.format {
        Format::Csv => output::scan_csv(&echo, &series),
        Format::Json => output::scan_json(&echo, &series)?,
    };
    emit(cfg.out.as_deref(), &text)?;
    if let (Some(script), Some(csv)) = (&cfg.plot_script, &cfg.out) {
        let title = format!("{} family, alpha = {}", echo.family, echo.alpha);
        emit(Some(script), &output::plot_script(csv, series.len(), &title))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct DeathJson {
    pair: &'static str,
    dead_intervals: Vec<[f64; 2]>,
    touch_points: Vec<f64>,
    period: f64,
    initial_concurrence: f64,
}

impl DeathJson {
    fn new(pair: &'static str, r: DeathReport) -> Self {
        Self {
            pair,
            dead_intervals: r.dead_intervals.iter().map(|&(a, b)| [a, b]).collect(),
            touch_points: r.touch_points,
            period: r.period,
            initial_concurrence: r.initial_concurrence,
        }
    }
}

pub fn death(cfg: &RunConfig) -> Result<(), CliError> {
    let init = cfg.initial_state()?;
    let series = scan_pairs(&init, &cfg.params, &cfg.pairs, cfg.t_max, cfg.steps, cfg.source, cfg.cutoff)?;
    let reports = series
        .iter()
        .map(|s| Ok(DeathJson::new(s.pair.label(), detect_death_default(s)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let text = if reports.len() == 1 {
        output::to_json(&reports[0])?
    } else {
        output::to_json(&reports)?
    };
    emit(cfg.out.as_deref(), &text)
}

#[derive(Serialize)]
struct ValidateJson<'a> {
    parameters: &'a Echo,
    pass: bool,
    max_abs_error: f64,
    worst_time: f64,
    tolerance: f64,
    samples: usize,
    amplitude_error: f64,
    density_error: f64,
    concurrence_error: f64,
}

pub fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    if !cfg.family.is_named() {
        return Err(analysis::AnalysisError::NamedFamilyRequired.into());
    }
    let init = cfg.initial_state()?;
    let r = analysis::validate(&init, &cfg.params, cfg.t_max, cfg.steps, cfg.tolerance, cfg.cutoff)?;
    let echo = Echo::new(cfg);
    let doc = ValidateJson {
        parameters: &echo,
        pass: r.pass,
        max_abs_error: r.max_abs_error,
        worst_time: r.worst_time,
        tolerance: r.tolerance,
        samples: r.samples,
        amplitude_error: r.amplitude_error,
        density_error: r.density_error,
        concurrence_error: r.concurrence_error,
    };
    emit(cfg.out.as_deref(), &output::to_json(&doc)?)?;
    if r.pass {
        Ok(())
    } else {
        Err(CliError::ValidationFailed {
            max_abs_error: r.max_abs_error,
            tolerance: r.tolerance,
        })
    }
}

#[derive(Serialize)]
struct SweepRow {
    alpha: f64,
    dead_intervals: Vec<[f64; 2]>,
    touch_points: Vec<f64>,
    first_interval_length: Option<f64>,
}

pub fn sweep(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.family == Family::Custom {
        return Err(CliError::Config("sweep requires a named family".into()));
    }
    let rows = sweep_alpha(cfg.family, &cfg.params, &cfg.alpha_values(), cfg.t_max, cfg.steps, cfg.source)?;
    let text = match cfg.format {
        Format::Json => {
            let rows: Vec<SweepRow> = rows
                .into_iter()
                .map(|r| SweepRow {
                    alpha: r.alpha,
                    first_interval_length: r.report.first_interval_length(),
                    dead_intervals: r.report.dead_intervals.iter().map(|&(a, b)| [a, b]).collect(),
                    touch_points: r.report.touch_points,
                })
                .collect();
            output::to_json(&rows)?
        }
        Format::Csv => {
            let mut s = Echo::new(cfg).comment();
            s.push_str("\nalpha,dead_intervals,first_start,first_end,first_length,touch_points\n");
            for r in rows {
                let (a, b) = r
                    .report
                    .dead_intervals
                    .first()
                    .map(|&(a, b)| (num(a), num(b)))
                    .unwrap_or_default();
                let len = r.report.first_interval_length().map(num).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{a},{b},{len},{}\n",
                    num(r.alpha),
                    r.report.dead_intervals.len(),
                    r.report.touch_points.len()
                ));
            }
            s
        }
    };
    emit(cfg.out.as_deref(), &text)
}
