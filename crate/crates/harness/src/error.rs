use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("config error at line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pcomplex::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
