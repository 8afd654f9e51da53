use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    /// A parameter point outside the region where the integral converges or
    /// the closed form is defined.
    #[error("{entry} requires {constraint}")]
    Domain { entry: String, constraint: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFiniteSample { x: f64 },

    #[error("unknown report format `{0}`")]
    UnknownFormat(String),

    #[error("no admissible grid points for `{0}`")]
    EmptyGrid(String),

    #[error("malformed report: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(entry: &str, constraint: impl Into<String>) -> Error {
    Error::Domain {
        entry: entry.to_string(),
        constraint: constraint.into(),
    }
}
