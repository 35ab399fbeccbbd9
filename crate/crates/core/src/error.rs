use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit `{cap}` exceeded: needed {needed}, limit {limit}")]
    Resource {
        cap: &'static str,
        limit: u64,
        needed: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn resource(cap: &'static str, limit: u64, needed: impl ToString) -> Self {
        Error::Resource {
            cap,
            limit,
            needed: needed.to_string(),
        }
    }
}
