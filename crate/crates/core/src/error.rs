use thiserror::Error;

/// Errors raised by the operator algebra, the coefficient tables and the file formats.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside its admissible range.
    #[error("domain error: {name} = {value} is out of range ({expected})")]
    Domain {
        name: &'static str,
        value: i128,
        expected: String,
    },

    /// Exact integer arithmetic left the 128-bit range.
    #[error("integer overflow while computing {0}")]
    Overflow(String),

    /// Two operands act on different numbers of qubits.
    #[error("dimension mismatch: {left} qubits vs {right} qubits")]
    Dimension { left: usize, right: usize },

    /// The requested object would be too large to build.
    #[error("resource guard: {0}")]
    Resource(String),

    /// Malformed Pauli string.
    #[error("invalid Pauli string: {0}")]
    PauliSyntax(String),

    /// Malformed operator document.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The operator has no terms where at least one is required.
    #[error("empty operator: {0}")]
    Empty(String),

    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: impl Into<i128>, expected: impl Into<String>) -> Self {
        Error::Domain {
            name,
            value: value.into(),
            expected: expected.into(),
        }
    }

    /// True for errors caused by a size guard rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
