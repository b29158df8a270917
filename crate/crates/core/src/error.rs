use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),
    /// A reflection or fundamental-region query at a vertex carrying a 1-cycle.
    #[error("vertex `{0}` carries a 1-cycle; reflection is undefined there")]
    UnsupportedVertex(String),
    /// Two representations over different fields were combined.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    /// An exponential search was asked to go beyond its configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A sampled representation failed a property that holds generically.
    #[error("genericity failure: {0}")]
    Genericity(String),
    /// A functor or normalisation step could not be applied to this input.
    #[error("obstruction: {0}")]
    Obstruction(String),
    /// The isomorphism semidecision ran out of options.
    #[error("undecided: {0}")]
    Undecided(String),
    /// An internal assertion failed. Always a bug.
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable reason tag used in JSON error documents.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::UnsupportedVertex(_) => "unsupported_vertex",
            Error::FieldMismatch(_) => "field_mismatch",
            Error::Resource(_) => "resource",
            Error::Genericity(_) => "genericity",
            Error::Obstruction(_) => "obstruction",
            Error::Undecided(_) => "undecided",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

macro_rules! ensure {
    ($cond:expr, $err:expr) => {
        if !$cond {
            return Err($err);
        }
    };
}
pub(crate) use ensure;
