use thiserror::Error;

/// Errors raised by the evaluators, enumerators and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// A brute-force computation or scan would exceed its configured cap.
    #[error("resource limit: {what} needs {requested} steps, cap is {cap}")]
    Resource {
        what: &'static str,
        requested: String,
        cap: u64,
    },

    /// Malformed input or an unknown name.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
