use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("malformed custom module: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] cubix_core::Error),

    #[error("resource cap: {0}")]
    Cap(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1: verification failure, 2: bad input, 3: resource cap.
    pub fn exit_code(&self) -> u8 {
        use cubix_core::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } | CliError::Json(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Verification(_) => 1,
            CliError::Core(e) => match e {
                E::CapExceeded { .. } => 3,
                E::Arity { .. }
                | E::NotAPermutation(_)
                | E::OutOfRange { .. }
                | E::Shape(_)
                | E::Relation { .. }
                | E::InvalidModule(_)
                | E::Unsupported(_) => 2,
                E::NotInSpan(_) | E::Dependent | E::Representation(_) | E::Commutation(_) | E::NotAComplex(_) => 1,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
