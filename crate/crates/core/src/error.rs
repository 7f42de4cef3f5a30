use thiserror::Error;

/// Errors raised by group, polynomial and formula operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments violate a documented precondition (mismatched groups, `s` not dividing `r`, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An operation was applied outside its domain, e.g. the exponential of a
    /// series with nonzero constant term.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration would exceed the configured element cap.
    #[error("enumeration of {required} elements exceeds the cap of {cap}; raise the cap to at least {required}")]
    CapExceeded { required: u128, cap: u128 },

    /// A value that must be an integer (a group-element count) came out fractional.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
