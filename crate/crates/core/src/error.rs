//! Error type shared across the crate.
//!
//! Every error carries enough context to print a one-line diagnostic; the CLI
//! maps each variant to a stable exit code and a machine-parsable class name.

use std::fmt;
use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// Incompatible matrix/vector shapes. `left`/`right` are (rows, cols).
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Invalid configuration value (bad dimension, k out of range, ...).
    Config(String),
    /// Invalid runtime input (out-of-vocab token id, empty slice, ...).
    Input(String),
    /// Numerical failure (non-convergence, degenerate operand, ...).
    Numeric(String),
    /// API misuse (stale trace, missing precondition, ...).
    Usage(String),
    /// Filesystem failure.
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed container file (bad magic, version, section layout, ...).
    Format(String),
    /// Container checksum mismatch.
    Checksum { expected: u64, actual: u64 },
}

impl Error {
    /// Short machine-parsable class name, stable across releases.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Shape { .. } => "shape",
            Error::Config(_) => "config",
            Error::Input(_) => "input",
            Error::Numeric(_) => "numeric",
            Error::Usage(_) => "usage",
            Error::Io { .. } => "io",
            Error::Format(_) => "format",
            Error::Checksum { .. } => "checksum",
        }
    }

    /// Process exit code used by the CLI. 0 is success; each class is distinct.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io { .. } => 3,
            Error::Checksum { .. } => 4,
            Error::Format(_) => 5,
            Error::Shape { .. } => 6,
            Error::Numeric(_) => 7,
            Error::Input(_) => 8,
            Error::Usage(_) => 9,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { op, left, right } => write!(
                f,
                "{op}: incompatible shapes {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::Config(msg) => write!(f, "{msg}"),
            Error::Input(msg) => write!(f, "{msg}"),
            Error::Numeric(msg) => write!(f, "{msg}"),
            Error::Usage(msg) => write!(f, "{msg}"),
            Error::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Error::Format(msg) => write!(f, "{msg}"),
            Error::Checksum { expected, actual } => write!(
                f,
                "checksum mismatch: stored {expected:#018x}, computed {actual:#018x}"
            ),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}
