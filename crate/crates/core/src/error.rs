use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Machine-readable reason code used in SKIPPED/FAIL reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::Config(_) => "ConfigError",
            Error::NoSolution => "NoSolution",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::TheoremViolation(_) => "TheoremViolation",
            Error::Parse(_) => "ParseError",
        }
    }

    /// Precondition failures become SKIPPED entries rather than failures.
    pub fn is_skip(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedCharacteristic(_) | Error::BudgetExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for bailing out with a theorem violation.
macro_rules! violation {
    ($($arg:tt)*) => {
        return Err($crate::error::Error::TheoremViolation(format!($($arg)*)))
    };
}
pub(crate) use violation;
