use thiserror::Error;

/// Errors raised by the arithmetic and notation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value must be a positive integer, got {0}")]
    NotPositive(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime commas are defined for primes 5 and above, got {0}")]
    PrimeTooSmall(u64),

    #[error("comma {0} is not 5-rough (it has a factor of 2 or 3)")]
    NotFiveRough(String),

    #[error("value {0} is not 3-limit")]
    NotThreeLimit(String),

    #[error("input has {digits} decimal digits, more than the factorization limit of {limit}")]
    TooManyDigits { digits: usize, limit: usize },

    #[error("prime factor of {0} does not fit in 64 bits")]
    PrimeFactorTooLarge(String),

    #[error("invalid comma table entry for prime {prime}: {reason}")]
    InvalidCommaEntry { prime: u64, reason: String },

    #[error("comma table self-check failed for prime {prime}: stored {stored}, algorithm gives {computed}")]
    SelfCheck {
        prime: u64,
        stored: String,
        computed: String,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("line {line}: {source}")]
    MelodyLine { line: usize, source: ParseError },

    #[error("line {line}: a common comma group must be the last token")]
    MisplacedCommonComma { line: usize },
}

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position} in {input:?}: {message}")]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
