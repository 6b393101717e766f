use thiserror::Error;

/// Errors raised by the algebraic layers and the input parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("cannot substitute 0 for `{0}`: it occurs with a negative exponent")]
    ZeroSubstitution(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("not a rational homology cylinder datum: the matrix (A;B) is singular under rho")]
    NotRationalHomologyCylinder,

    #[error("invalid drop index {index}: {reason}")]
    InvalidDrop { index: usize, reason: String },

    #[error("torsion undefined: the twisted chain complex is not acyclic (Alexander polynomial vanishes)")]
    NonAcyclic,

    #[error("degenerate Alexander polynomial (identically zero)")]
    DegenerateAlexander,

    #[error("pretzel parameters must all be odd, got {0:?}")]
    NotOdd(Vec<i64>),

    #[error("invalid presentation: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
