use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("weight matrix is not coherent at subset {subset}: {reason}")]
    Coherence { subset: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
