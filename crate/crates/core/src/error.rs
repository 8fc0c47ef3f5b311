use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A gamma argument landed on a nonpositive integer.
    #[error("gamma pole at argument {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("closed form is degenerate: {0}")]
    Degenerate(String),

    #[error("need at least {needed} distinct sample points, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("series does not terminate: no nonpositive integer among upper parameters")]
    NonTerminating,

    #[error("lower parameter {param} hits a pole before the series terminates at index {terminate}")]
    LowerParamPole { param: String, terminate: u64 },

    #[error("pipeline pole: {0} vanishes")]
    PipelinePole(String),

    #[error("negative index {0} where a nonnegative one is required")]
    NegativeIndex(i64),

    /// Two independent evaluations of the same quantity disagreed.
    #[error("{what}: {left} != {right}")]
    Mismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
