use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use double_jc::analysis::{ConcurrenceSeries, Source};
use double_jc::Family;
use serde::Serialize;

use crate::args::RunConfig;
use crate::error::CliError;

/// Parameters echoed at the top of every output.
#[derive(Debug, Serialize)]
pub struct Echo {
    pub family: &'static str,
    pub alpha: f64,
    pub omega: f64,
    pub nu: f64,
    pub g: f64,
    pub delta: f64,
    #[serde(rename = "G")]
    pub big_g: f64,
    pub tmax: f64,
    pub steps: usize,
    pub source: &'static str,
    pub cutoff: usize,
}

impl Echo {
    pub fn new(cfg: &RunConfig) -> Self {
        let k = cfg.params.constants();
        Self {
            family: family_name(cfg.family),
            alpha: cfg.alpha,
            omega: cfg.params.omega(),
            nu: cfg.params.nu(),
            g: cfg.params.g(),
            delta: k.delta,
            big_g: k.big_g,
            tmax: cfg.t_max,
            steps: cfg.steps,
            source: source_name(cfg.source),
            cutoff: cfg.cutoff,
        }
    }

    pub fn comment(&self) -> String {
        format!(
            "# family={} alpha={} omega={} nu={} g={} delta={} G={} tmax={} steps={} source={} cutoff={}",
            self.family,
            self.alpha,
            self.omega,
            self.nu,
            self.g,
            self.delta,
            self.big_g,
            self.tmax,
            self.steps,
            self.source,
            self.cutoff
        )
    }
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::PsiAlpha => "psi",
        Family::PhiAlpha => "phi",
        Family::Custom => "custom",
    }
}

pub fn source_name(s: Source) -> &'static str {
    match s {
        Source::ClosedForm => "closed",
        Source::Oracle => "oracle",
    }
}

/// 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn scan_csv(echo: &Echo, series: &[ConcurrenceSeries]) -> String {
    let mut s = echo.comment();
    s.push('\n');
    s.push('t');
    for c in series {
        write!(s, ",{}", c.pair).unwrap();
    }
    s.push('\n');
    for (i, t) in series[0].times.iter().enumerate() {
        s.push_str(&num(*t));
        for c in series {
            s.push(',');
            s.push_str(&num(c.values[i]));
        }
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct PairColumn<'a> {
    pair: &'static str,
    values: &'a [f64],
}

#[derive(Serialize)]
struct ScanJson<'a> {
    parameters: &'a Echo,
    t: &'a [f64],
    series: Vec<PairColumn<'a>>,
}

pub fn scan_json(echo: &Echo, series: &[ConcurrenceSeries]) -> Result<String, CliError> {
    let doc = ScanJson {
        parameters: echo,
        t: &series[0].times,
        series: series
            .iter()
            .map(|c| PairColumn {
                pair: c.pair.label(),
                values: &c.values,
            })
            .collect(),
    };
    to_json(&doc)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Config(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// gnuplot script drawing every concurrence column of `csv` against `t`.
pub fn plot_script(csv: &Path, columns: usize, title: &str) -> String {
    let data = escape(&csv.display().to_string());
    let image = escape(&csv.with_extension("png").display().to_string());
    format!(
        "set terminal pngcairo size 900,600\n\
         set output \"{image}\"\n\
         set datafile separator \",\"\n\
         set datafile commentschars \"#\"\n\
         set key autotitle columnhead\n\
         set title \"{}\"\n\
         set xlabel \"t\"\n\
         set ylabel \"concurrence\"\n\
         set yrange [0:1.05]\n\
         set grid\n\
         plot for [i=2:{}] \"{data}\" using 1:i with lines lw 2\n",
        escape(title),
        columns + 1
    )
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Writes to `path`, or stdout when `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p.display().to_string(), e)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("stdout", e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [0.0, 1.0 / 3.0, std::f64::consts::PI, 1e-300, 0.1 + 0.2] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(num(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn script_quotes_paths() {
        let s = plot_script(Path::new("out \"x\".csv"), 2, "scan");
        assert!(s.contains("\"out \\\"x\\\".csv\""));
        assert!(s.contains("plot for [i=2:3]"));
    }
}
