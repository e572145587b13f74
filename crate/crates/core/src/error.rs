use thiserror::Error;

/// Errors raised by graph construction, polynomial algebra and the numerical
/// energy routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order {n}: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported size {n} (limit {limit})")]
    UnsupportedSize { n: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no convergence: {what} (best estimate {estimate}, error {error:e})")]
    Convergence {
        what: &'static str,
        estimate: f64,
        error: f64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
