use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (bad board
    /// dimensions, out-of-range square, inadmissible composition, ...).
    #[error("input out of domain: {0}")]
    Domain(String),

    /// A well-formed object that does not meet a structural requirement of
    /// the requested operation, e.g. a placement that is not maximum.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// An object failed its validator; carries every diagnostic produced.
    #[error("validation failed: {}", .0.join("; "))]
    Invalid(Vec<String>),

    /// The operation is not defined for this shape / parity of k.
    #[error("unsupported domain: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Something that the mathematics guarantees did not hold. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: 0,
            column: 0,
            message: message.into(),
        }
    }
}

/// Outcome of a validator: empty diagnostics means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Validation {
    pub diagnostics: Vec<String>,
}

impl Validation {
    pub fn ok() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub(crate) fn push(&mut self, msg: impl Into<String>) {
        self.diagnostics.push(msg.into());
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(self.diagnostics))
        }
    }
}
