use thiserror::Error;

/// Every failure the library can report.
///
/// Domain failures (degenerate forms, zero divisors) and input failures
/// (lexing, parsing, unbound variables) share one enum so expression
/// evaluation can propagate either through `?`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero quaternion")]
    ZeroDivisor,
    #[error("logarithm of zero")]
    LogOfZero,
    #[error("arctangent pole at z = +/-i")]
    AtanPole,
    #[error("matrix is not of the form [[z1, z2], [-conj(z2), conj(z1)]]")]
    NotQuaternionic,
    #[error("Cjs form does not exist: z1^2 + z2^2 = 0 for a nonzero quaternion")]
    CjsDegenerate,
    #[error("closed-form complex angle is undefined here")]
    DegenerateAlpha,
    #[error("logarithmic form needs strictly positive components")]
    LogDomain,
    #[error("factored binomial needs a + bi != 0")]
    ZeroLeadingComplex,
    #[error("expression references z but no value was supplied")]
    UnboundVariable,
    #[error("unexpected character {found:?} at position {position}")]
    Lex { position: usize, found: char },
    #[error("at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable variant name, as printed by the command line front-end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroDivisor => "ZeroDivisor",
            Error::LogOfZero => "LogOfZero",
            Error::AtanPole => "AtanPole",
            Error::NotQuaternionic => "NotQuaternionic",
            Error::CjsDegenerate => "CjsDegenerate",
            Error::DegenerateAlpha => "DegenerateAlpha",
            Error::LogDomain => "LogDomain",
            Error::ZeroLeadingComplex => "ZeroLeadingComplex",
            Error::UnboundVariable => "UnboundVariable",
            Error::Lex { .. } => "LexError",
            Error::Parse { .. } => "ParseError",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    /// True for errors caused by malformed input rather than by the
    /// mathematics of a well-formed request.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Lex { .. } | Error::Parse { .. } | Error::UnboundVariable | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
