use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,

    #[error("invalid parameters in {node}: {reason}")]
    InvalidParameters { node: String, reason: String },

    #[error("{0} is outside the class of knots with genus equal to tau")]
    OutsideP(String),

    #[error("{0} is not an L-space knot")]
    NotLSpaceKnot(String),

    #[error("polynomial {0} does not have L-space form")]
    NotLSpaceForm(String),

    #[error("boundary does not square to zero")]
    NotAComplex,

    #[error("surgery slope {0} is not positive")]
    NonPositiveSlope(String),

    #[error("invalid slope {text}: {reason}")]
    InvalidSlope { text: String, reason: String },

    #[error("{0} is not a cable")]
    NotACable(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn invalid(node: impl ToString, reason: impl Into<String>) -> Self {
        Error::InvalidParameters {
            node: node.to_string(),
            reason: reason.into(),
        }
    }

    /// Syntax errors, as opposed to well-formed input with bad values.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
