use thiserror::Error;

/// Errors produced by ideal computations and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("the unit ideal has no proper invariants")]
    UnitIdeal,

    #[error("the zero ideal has no proper invariants")]
    ZeroIdeal,

    #[error("exponent {exponent} exceeds the limit {limit}")]
    ExponentLimit { exponent: u64, limit: u32 },

    #[error("decomposition exceeded {limit} components")]
    ComponentLimit { limit: usize },

    #[error("cover enumeration over {count} components exceeds the limit {limit}")]
    CoverLimit { count: usize, limit: usize },

    #[error("cover search exceeded {limit} nodes")]
    CoverSearchLimit { limit: u64 },

    #[error("top base enumeration exceeded {limit} branches")]
    TopBaseLimit { limit: usize },

    #[error("empty list of components")]
    EmptyDecomposition,

    #[error("component has no positive exponent")]
    EmptyComponent,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("deformation shape mismatch: {0}")]
    DeformationShape(String),

    #[error("deformation violates order or zero preservation")]
    InvalidDeformation,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for the errors that mean a configured cap was hit.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ExponentLimit { .. }
                | Error::ComponentLimit { .. }
                | Error::CoverLimit { .. }
                | Error::CoverSearchLimit { .. }
                | Error::TopBaseLimit { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
