use thiserror::Error;

/// Failure modes shared by every routine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} exceeds the cap of {cap}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{0}")]
    Domain(String),
    #[error("degenerate Gram pivot at alpha = {0}")]
    SingularParameter(String),
    #[error("inexact division: {0}")]
    Inexact(String),
    #[error("cannot parse {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::SizeLimit { what, value, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
