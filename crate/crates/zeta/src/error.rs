use thiserror::Error;

/// Errors shared by every pipeline in the crate.
///
/// All of these are precondition violations; once arguments pass validation
/// the pipelines are total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    /// The harmonic series: every pipeline rejects s = 1 with this distinct error.
    #[error("zeta(1) diverges; the argument must be an integer >= 2")]
    PoleAtOne,

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("Hurwitz parameter must lie in (0, 1], got {0}")]
    ParameterOutOfRange(String),

    #[error("polygamma order 0 (the digamma itself) is not supported; order must be >= 1")]
    DigammaOrder,

    #[error("the reflection residual is defined for even arguments only, got {0}")]
    OddReflectionArgument(u64),

    #[error("precision must be at least 1 bit")]
    ZeroPrecision,

    #[error("cannot parse {what} from {input:?}")]
    Parse {
        what: &'static str,
        input: String,
    },
}

pub type Result<T> = std::result::Result<T, ZetaError>;
