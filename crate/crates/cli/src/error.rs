use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Math(#[from] arf_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid form file: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    /// Stable machine-readable error name.
    pub fn code(&self) -> &'static str {
        use arf_core::Error as E;
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::Json(_) => "FormFileError",
            CliError::Math(e) => match e {
                E::ZeroInverse => "ZeroInverse",
                E::InvalidDegree { .. } => "InvalidDegree",
                E::InvalidModulus { .. } => "InvalidModulus",
                E::ReducibleModulus { .. } => "ReducibleModulus",
                E::ElementOutOfRange => "ElementOutOfRange",
                E::LevelCapExceeded { .. } => "LevelCapExceeded",
                E::DimensionMismatch { .. } => "DimensionMismatch",
                E::ContextMismatch => "ContextMismatch",
                E::NotAlternating => "NotAlternating",
                E::SingularMatrix => "SingularMatrix",
                E::DegenerateForm => "DegenerateForm",
                E::NotALagrangian => "NotALagrangian",
                E::NotAWuVector => "NotAWuVector",
                E::DecompositionFailed => "DecompositionFailed",
                E::BudgetExceeded { .. } => "BudgetExceeded",
                E::InconsistentInvariant => "InconsistentInvariant",
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
