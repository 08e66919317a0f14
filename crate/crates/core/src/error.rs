use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("rational function with zero denominator")]
    ZeroDenominator,

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("polynomial does not vanish at the origin, so it defines no germ")]
    NotAGerm,

    #[error("at most two exceptional curves can pass through a point, got {0}")]
    TooManyThrough(usize),

    #[error("invalid number of exceptional surfaces through the center: {0}")]
    InvalidThroughCount(String),

    #[error("blow-up center is not defined over the rationals ({0})")]
    UnsupportedIrrationalCenter(String),

    #[error("resolution did not finish within {0} blow-ups")]
    BlowupLimit(usize),

    #[error("denominator has a root that is not rational")]
    NonRationalDenominatorRoot,

    #[error("alpha value vanishes for {0}")]
    AlphaZero(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("mismatch in {context}: expected {expected}, computed {computed}")]
    Mismatch {
        context: String,
        expected: String,
        computed: String,
    },

    #[error("specialization point {0} is a pole")]
    PoleAtSpecialization(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
