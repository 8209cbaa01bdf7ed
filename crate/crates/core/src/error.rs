use thiserror::Error;

/// Errors surfaced by the library API.
///
/// Per-trial detector trouble (divergence, rank deficiency) is *not* an
/// error: it is reported through trial flags so that Monte-Carlo runs keep
/// going and account for every frame.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid scenario parameters (bad constellation order, V < L, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed input file.
    #[error("parse error in {path} line {line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Mismatched dimensions between caller-supplied structures.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A reference/oracle routine was asked to run beyond its size guard.
    #[error("oracle scope exceeded: {0}")]
    OracleScope(String),

    /// I/O failure while reading config/profile files or writing reports.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
