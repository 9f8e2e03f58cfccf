use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HccError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    /// An operator failed to descend to a quotient, or a map left the subspace
    /// it was supposed to preserve.
    #[error("{what} is not well defined (residual {residual})")]
    NotWellDefined { what: String, residual: String },

    /// A structure that must satisfy an identity does not.
    #[error("{0}")]
    Structure(String),

    #[error("degree {degree} is out of range for cap {cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cyclic completion infeasible in degree {degree} (residual {residual})")]
    Infeasible { degree: usize, residual: String },
}

pub type Result<T> = std::result::Result<T, HccError>;
