use std::path::PathBuf;

/// Command-line failures, split by exit status: [`CliError::exit_code`] is 2
/// for bad input and 1 for internal failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("{0}")]
    Invalid(seifert_cs::Error),

    #[error("{0}")]
    Usage(String),

    #[error("line {line}: {source}")]
    BatchLine { line: usize, source: Box<CliError> },

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<seifert_cs::Error> for CliError {
    fn from(e: seifert_cs::Error) -> Self {
        match e {
            seifert_cs::Error::AuditMismatch { .. } => CliError::Internal(e.to_string()),
            other => CliError::Invalid(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Invalid(_) | CliError::Usage(_) | CliError::Catalog(_) => 2,
            CliError::BatchLine { source, .. } => source.exit_code(),
            CliError::Io { .. } | CliError::Internal(_) => 1,
        }
    }
}
