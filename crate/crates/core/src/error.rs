use crate::scalar::LiteralError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed input text or structure, with the offending location.
    #[error("{location}: {message}")]
    Format { location: String, message: String },

    #[error("{location}: {source}")]
    Literal {
        location: String,
        #[source]
        source: LiteralError,
    },

    #[error("dimension mismatch at {location}: expected {expected}, found {found}")]
    Dimension {
        location: String,
        expected: usize,
        found: usize,
    },

    #[error("degree overflow: {left} + {right} exceeds top degree {top}")]
    DegreeOverflow { left: usize, right: usize, top: usize },

    #[error("expected a class of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },

    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The hypotheses of the requested analysis are not met by this input.
    #[error("criterion inapplicable: {0}")]
    Inapplicable(String),
}

impl Error {
    pub(crate) fn format(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by unmet hypotheses rather than bad input.
    pub fn is_inapplicable(&self) -> bool {
        matches!(self, Error::Inapplicable(_))
    }
}
