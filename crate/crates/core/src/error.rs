use thiserror::Error;

/// Errors raised by the exact-arithmetic layers and the constructors built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A specialized parameter value made a needed denominator vanish or made
    /// two interpolation nodes coincide.
    #[error("specialization collision: {0}")]
    SpecializationCollision(String),

    /// A linear system that should be uniquely solvable was singular with
    /// every parameter symbolic.
    #[error("singular interpolation system: {0}")]
    SingularSystem(String),

    #[error("dimension mismatch: {0}")]
    DimensionError(String),

    #[error("index out of range: {0}")]
    IndexError(String),

    #[error("degree bound violated: {0}")]
    DegreeError(String),

    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),

    /// An exact division that must succeed left a remainder. Always a bug.
    #[error("nonzero remainder in exact division: {0}")]
    NonzeroRemainder(String),

    #[error("usage error: {0}")]
    UsageError(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Attach the instance being computed to a collision-type error.
    ///
    /// Division by zero and singular systems become collisions when any
    /// parameter is specialized, otherwise they keep their kind.
    pub fn in_context(self, specialized: bool, instance: impl std::fmt::Display) -> Error {
        match self {
            Error::DivisionByZero | Error::SingularSystem(_) if specialized => {
                Error::SpecializationCollision(format!("{instance}: {self}"))
            }
            Error::SingularSystem(msg) => Error::SingularSystem(format!("{instance}: {msg}")),
            Error::SpecializationCollision(msg) if !msg.contains(&instance.to_string()) => {
                Error::SpecializationCollision(format!("{instance}: {msg}"))
            }
            other => other,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
