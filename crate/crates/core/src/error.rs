use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{k} exceeds the supported bound of {max} elements")]
    FieldTooLarge { p: u32, k: u32, max: usize },
    #[error("element index {idx} is outside GF({q})")]
    ElementOutOfRange { idx: usize, q: usize },
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{what} needs {needed} units of work, budget is {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// Checks `needed <= cap`.
    pub(crate) fn check_budget(what: &'static str, needed: u128, cap: u128) -> Result<()> {
        if needed > cap {
            Err(Error::BudgetExceeded { what, needed, cap })
        } else {
            Ok(())
        }
    }
}
