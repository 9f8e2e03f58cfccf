use hcc_core::HccError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad catalog file, unknown name or out-of-range request.
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(HccError),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for usage and input errors, 1 for failed preconditions and checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                HccError::Parse(_) | HccError::Dimension(_) | HccError::DegreeOutOfRange { .. } => 2,
                _ => 1,
            },
        }
    }
}
