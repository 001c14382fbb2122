use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// The CLI maps these onto exit codes: parse errors exit with 1, precondition
/// violations with 2 and enumeration cap overruns with 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field too large: q = {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("element does not belong to {0}")]
    ForeignElement(String),
    #[error("operands come from different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("{0}")]
    Precondition(String),
    #[error("cap exceeded: dimension {dim} is above the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("the code is the zero code")]
    ZeroCode,
    #[error("Lee weight is only defined over F_2 + uF_2")]
    LeeOutsideF2,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
