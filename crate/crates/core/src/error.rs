use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An exhaustive computation would exceed its configured budget.
    #[error("cap exceeded for {what}: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    /// A diminisher, rule, composition, kernel or reduction broke its contract.
    #[error("contract violated by {stage}: {detail}")]
    Contract { stage: String, detail: String },
    /// The instance is structurally invalid for the requested operation.
    #[error("invalid instance: {0}")]
    Invalid(String),
    /// A line-based text format could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Random generation could not satisfy its guards within the retry budget.
    #[error("generator for {problem} gave up after {attempts} attempts")]
    GeneratorExhausted {
        problem: &'static str,
        attempts: usize,
    },
    #[error("parameter arithmetic overflow")]
    Overflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn contract(stage: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Contract {
            stage: stage.into(),
            detail: detail.into(),
        }
    }

    /// Whether this error is a refusal because some exhaustive search was
    /// too large, as opposed to a bad input or a broken contract.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
