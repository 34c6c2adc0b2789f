//! Command-line plumbing: run configuration, file formats, SVG figures and
//! the subcommand implementations used by the `qcft` binary.

pub mod commands;
pub mod config;
pub mod formats;
pub mod svg;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{context}: {source}")]
    File {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl IoError {
    /// Process exit code: 1 for usage problems, 2 for broken invariants.
    pub fn exit_code(&self) -> u8 {
        match self {
            IoError::Invariant(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn file(context: impl Into<String>, source: std::io::Error) -> Self {
        IoError::File {
            context: context.into(),
            source,
        }
    }
}
