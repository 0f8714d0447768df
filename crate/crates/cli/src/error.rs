use std::io;

use double_jc::analysis::AnalysisError;
use double_jc::{ModelError, NumericsError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Analysis(AnalysisError),
    #[error("{0}")]
    QubitEquivalence(NumericsError),
    #[error("validation failed: max error {max_abs_error:e} exceeds tolerance {tolerance:e}")]
    ValidationFailed { max_abs_error: f64, tolerance: f64 },
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::ValidationFailed { .. } => 1,
            CliError::QubitEquivalence(_) => 3,
            _ => 2,
        }
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Numerics(n @ NumericsError::QubitEquivalence { .. }) => CliError::QubitEquivalence(n),
            AnalysisError::Model(m) => CliError::Model(m),
            other => CliError::Analysis(other),
        }
    }
}

impl From<NumericsError> for CliError {
    fn from(e: NumericsError) -> Self {
        AnalysisError::Numerics(e).into()
    }
}
