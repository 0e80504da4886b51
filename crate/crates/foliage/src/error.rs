use thiserror::Error;

/// Errors raised by the engine.
///
/// Each variant carries a stable machine-readable code and maps to a process
/// exit status for the command-line front end.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FoliageError {
    #[error("input error: {0}")]
    Input(String),
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),
    #[error("bounded reduction: {0}")]
    BoundedReduction(String),
}

pub type Result<T> = std::result::Result<T, FoliageError>;

impl FoliageError {
    pub fn input(msg: impl Into<String>) -> Self {
        FoliageError::Input(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        FoliageError::ModelInconsistency(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        FoliageError::ContractViolation(msg.into())
    }

    pub fn code(&self) -> &'static str {
        match self {
            FoliageError::Input(_) => "input_error",
            FoliageError::ModelInconsistency(_) => "model_inconsistency",
            FoliageError::ContractViolation(_) => "contract_violation",
            FoliageError::DecompositionFailure(_) => "decomposition_failure",
            FoliageError::BoundedReduction(_) => "bounded_reduction",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            FoliageError::Input(_) => 2,
            _ => 3,
        }
    }
}
