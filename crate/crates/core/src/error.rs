use thiserror::Error;

/// Errors raised by evaluation, registry lookups, verification and solving.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("point outside the natural domain of {problem}: {detail}")]
    DomainViolation { problem: String, detail: String },

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown parameter `{param}` for {problem}")]
    UnknownParameter { problem: String, param: String },

    #[error("parameter {param} = {value} out of range for {problem} (requires {requirement})")]
    ParameterOutOfRange {
        problem: String,
        param: String,
        value: f64,
        requirement: &'static str,
    },

    #[error("{problem} is not checkable: {reason}")]
    NotCheckable { problem: String, reason: String },

    #[error("{0} is not twice differentiable")]
    NotSmooth(String),

    #[error("no feasible point found for {0}")]
    NoFeasiblePoint(String),

    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
