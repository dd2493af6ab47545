use crate::report::CheckReport;

/// Errors raised by constructors and operations whose inputs violate a
/// structural requirement. Failed axiom checks are not errors; they are
/// reported through [`CheckReport`].
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A required axiom check failed on an input.
    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Box<CheckReport>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not invertible (regularity required)")]
    NotRegular(String),

    #[error("{0} is not fixed by the twist map")]
    NotFixed(String),

    #[error("not a cochain: {0}")]
    NotCochain(String),

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    /// A result contradicted a property the construction guarantees.
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Box::new(report),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
