use std::collections::HashMap;
use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use double_jc::analysis::{Source, DEFAULT_STEPS};
use double_jc::model::DEFAULT_COUPLING;
use double_jc::{Family, InitialState, ModelParams, SubsystemPair};
use num_complex::Complex64;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "double-jc", version, about = "Entanglement dynamics of two atoms in two independent cavities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dressed-state constants.
    Constants(RunArgs),
    /// Concurrence time series.
    Scan(RunArgs),
    /// Dead intervals and touch points of the concurrence.
    Death(RunArgs),
    /// Compare the closed form against exact propagation.
    Validate(RunArgs),
    /// Death report for a grid of initial angles.
    Sweep(RunArgs),
}

impl Command {
    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Constants(a)
            | Command::Scan(a)
            | Command::Death(a)
            | Command::Validate(a)
            | Command::Sweep(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Psi,
    Phi,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairArg {
    #[value(name = "AB")]
    AtomAtom,
    #[value(name = "ab")]
    ModeMode,
    #[value(name = "Aa")]
    AtomAModeA,
    #[value(name = "Bb")]
    AtomBModeB,
    #[value(name = "Ab")]
    AtomAModeB,
    #[value(name = "Ba")]
    AtomBModeA,
    #[value(name = "all")]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Flags shared by every subcommand. Anything left unset falls back to the
/// `--config` file, then to the built-in default.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// key = value file; command-line flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Initial angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Detuning Δ = ω − ν.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    /// Interaction strength G = 2g.
    #[arg(long = "G", allow_hyphen_values = true)]
    pub big_g: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tmax: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum)]
    pub pair: Option<PairArg>,
    #[arg(long, value_enum)]
    pub source: Option<SourceArg>,
    /// Photon cutoff per cavity.
    #[arg(long)]
    pub cutoff: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Initial amplitudes for `--family custom`, one "re im" pair per line.
    #[arg(long)]
    pub amplitudes: Option<PathBuf>,
    /// Validation tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_max: Option<f64>,
    #[arg(long)]
    pub alpha_steps: Option<usize>,
    /// Write a gnuplot script that plots the CSV written to `--out`.
    #[arg(long)]
    pub plot_script: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Fully resolved run settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    pub alpha: f64,
    pub amplitudes: Option<PathBuf>,
    pub params: ModelParams,
    pub t_max: f64,
    pub steps: usize,
    pub pairs: Vec<SubsystemPair>,
    pub source: Source,
    pub cutoff: usize,
    pub format: Format,
    pub tolerance: f64,
    pub alpha_grid: (f64, f64, usize),
    pub plot_script: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Config(format!("config: invalid value {value:?} for {key}")))
}

fn parse_enum<T: ValueEnum>(key: &str, value: &str) -> Result<T, CliError> {
    T::from_str(value, false).map_err(|_| CliError::Config(format!("config: invalid value {value:?} for {key}")))
}

/// Reads `key = value` lines; `#` starts a comment.
pub fn read_config_file(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    let mut map = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("{}:{}: expected key = value", path.display(), n + 1)))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

impl RunArgs {
    /// Fills unset fields from `file`.
    pub fn merge(&mut self, file: &HashMap<String, String>) -> Result<(), CliError> {
        fn fill<T>(slot: &mut Option<T>, v: Result<T, CliError>) -> Result<(), CliError> {
            if slot.is_none() {
                *slot = Some(v?);
            }
            Ok(())
        }
        let mut keys: Vec<_> = file.keys().collect();
        keys.sort();
        for key in keys {
            let v = file[key].as_str();
            let k = key.as_str();
            match k {
                "family" => fill(&mut self.family, parse_enum(k, v))?,
                "alpha" => fill(&mut self.alpha, parse_value(k, v))?,
                "delta" => fill(&mut self.delta, parse_value(k, v))?,
                "G" => fill(&mut self.big_g, parse_value(k, v))?,
                "omega" => fill(&mut self.omega, parse_value(k, v))?,
                "nu" => fill(&mut self.nu, parse_value(k, v))?,
                "g" => fill(&mut self.g, parse_value(k, v))?,
                "tmax" => fill(&mut self.tmax, parse_value(k, v))?,
                "steps" => fill(&mut self.steps, parse_value(k, v))?,
                "pair" => fill(&mut self.pair, parse_enum(k, v))?,
                "source" => fill(&mut self.source, parse_enum(k, v))?,
                "cutoff" => fill(&mut self.cutoff, parse_value(k, v))?,
                "format" => fill(&mut self.format, parse_enum(k, v))?,
                "amplitudes" => fill(&mut self.amplitudes, Ok(PathBuf::from(v)))?,
                "tolerance" => fill(&mut self.tolerance, parse_value(k, v))?,
                "alpha-min" => fill(&mut self.alpha_min, parse_value(k, v))?,
                "alpha-max" => fill(&mut self.alpha_max, parse_value(k, v))?,
                "alpha-steps" => fill(&mut self.alpha_steps, parse_value(k, v))?,
                _ => return Err(CliError::Config(format!("config: unknown key {k:?}"))),
            }
        }
        Ok(())
    }

    fn params(&self) -> Result<ModelParams, CliError> {
        let detuned = self.delta.is_some() || self.big_g.is_some();
        let bare = self.omega.is_some() || self.g.is_some();
        if detuned && bare {
            return Err(CliError::Config(
                "give either --delta/--G or --omega/--g, not both".into(),
            ));
        }
        if bare {
            let g = self.g.unwrap_or(DEFAULT_COUPLING);
            let nu = self.nu.unwrap_or(20.0 * g);
            Ok(ModelParams::new(self.omega.unwrap_or(nu), nu, g)?)
        } else {
            let big_g = self.big_g.unwrap_or(2.0 * DEFAULT_COUPLING);
            let nu = self.nu.unwrap_or(10.0 * big_g);
            Ok(ModelParams::from_detuning(self.delta.unwrap_or(0.0), big_g, nu)?)
        }
    }

    pub fn resolve(mut self) -> Result<RunConfig, CliError> {
        if let Some(path) = self.config.clone() {
            self.merge(&read_config_file(&path)?)?;
        }
        let params = self.params()?;
        let family = match self.family.unwrap_or(FamilyArg::Psi) {
            FamilyArg::Psi => Family::PsiAlpha,
            FamilyArg::Phi => Family::PhiAlpha,
            FamilyArg::Custom => Family::Custom,
        };
        let t_max = self.tmax.unwrap_or(4.0 * PI / params.constants().big_g);
        let pairs = match self.pair.unwrap_or(PairArg::AtomAtom) {
            PairArg::All => SubsystemPair::ALL.to_vec(),
            PairArg::AtomAtom => vec![SubsystemPair::AB],
            PairArg::ModeMode => vec![SubsystemPair::ab],
            PairArg::AtomAModeA => vec![SubsystemPair::Aa],
            PairArg::AtomBModeB => vec![SubsystemPair::Bb],
            PairArg::AtomAModeB => vec![SubsystemPair::Ab],
            PairArg::AtomBModeA => vec![SubsystemPair::Ba],
        };
        let source = match self.source.unwrap_or(SourceArg::Closed) {
            SourceArg::Closed => Source::ClosedForm,
            SourceArg::Oracle => Source::Oracle,
        };
        if self.plot_script.is_some() && self.out.is_none() {
            return Err(CliError::Config("--plot-script needs --out for the CSV it plots".into()));
        }
        let alpha_steps = self.alpha_steps.unwrap_or(50);
        if alpha_steps == 0 {
            return Err(CliError::Config("--alpha-steps must be at least 1".into()));
        }
        Ok(RunConfig {
            family,
            alpha: self.alpha.unwrap_or(PI / 4.0),
            amplitudes: self.amplitudes,
            params,
            t_max,
            steps: self.steps.unwrap_or(DEFAULT_STEPS),
            pairs,
            source,
            cutoff: self.cutoff.unwrap_or(1),
            format: self.format.unwrap_or(Format::Csv),
            tolerance: self.tolerance.unwrap_or(1e-9),
            alpha_grid: (
                self.alpha_min.unwrap_or(PI / 100.0),
                self.alpha_max.unwrap_or(PI / 2.0),
                alpha_steps,
            ),
            plot_script: self.plot_script,
            out: self.out,
        })
    }
}

impl RunConfig {
    pub fn initial_state(&self) -> Result<InitialState, CliError> {
        match self.family {
            Family::Custom => {
                let path = self
                    .amplitudes
                    .as_ref()
                    .ok_or_else(|| CliError::Config("--family custom needs --amplitudes <file>".into()))?;
                Ok(InitialState::custom(read_amplitudes(path)?))
            }
            named => Ok(InitialState::named(named, self.alpha)),
        }
    }

    pub fn alpha_values(&self) -> Vec<f64> {
        let (lo, hi, n) = self.alpha_grid;
        if n == 1 {
            return vec![lo];
        }
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    }
}

/// One complex amplitude per non-empty line, written as `re im`.
fn read_amplitudes(path: &PathBuf) -> Result<Vec<Complex64>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let bad = || CliError::Config(format!("{}: bad amplitude line {l:?}", path.display()));
            match parts.as_slice() {
                [re] => Ok(Complex64::new(re.parse().map_err(|_| bad())?, 0.0)),
                [re, im] => Ok(Complex64::new(
                    re.parse().map_err(|_| bad())?,
                    im.parse().map_err(|_| bad())?,
                )),
                _ => Err(bad()),
            }
        })
        .collect()
}
