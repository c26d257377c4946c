//! Library side of the `ndnoma` binary: configuration parsing, CSV output,
//! figure presets, and the subcommand drivers. Kept as a library so the
//! integration tests can exercise everything short of `main`.

pub mod config;
pub mod output;
pub mod presets;
pub mod run;

use std::process::ExitCode;

/// CLI-level failures. Configuration and usage problems exit with code 2,
/// runtime failures (I/O, compute) with code 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] ndnoma_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn config(line: usize, message: impl Into<String>) -> Self {
        CliError::Config {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Config { .. } | CliError::Usage(_) => ExitCode::from(2),
            CliError::Core(ndnoma_core::Error::InvalidParameter { .. }) => ExitCode::from(2),
            _ => ExitCode::from(3),
        }
    }
}
