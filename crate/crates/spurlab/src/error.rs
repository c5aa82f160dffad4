//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an input contract (shape mismatch, out-of-range
    /// label, overlapping index sets, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A non-finite value appeared during evaluation or training.
    #[error("numeric error in {context}: {message}")]
    Numeric {
        /// Where the bad value was produced ("layer 2", "iteration 3", ...).
        context: String,
        message: String,
    },

    /// A dataset or model file did not match the expected format.
    #[error("format error: {0}")]
    Format(String),

    /// The weighted least-squares design matrix is singular and no ridge was
    /// requested.
    #[error("degenerate design: {0}")]
    DegenerateDesign(String),

    /// Attribution vector is identically zero; it cannot be normalized.
    #[error("degenerate attribution: {0}")]
    DegenerateAttribution(String),

    /// Alignment is undefined because one of the vectors has zero norm.
    #[error("undefined alignment: {0}")]
    UndefinedAlignment(String),

    /// An experiment configuration failed validation. `path` is the offending
    /// key, dotted from the config root (e.g. `refinement.lambda`).
    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn numeric(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Numeric {
            context: context.into(),
            message: message.into(),
        }
    }

    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    /// Process exit code the CLI maps this error to: 2 for configuration
    /// problems, 3 for everything that happens at run time.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            _ => 3,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
