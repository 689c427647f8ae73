use alloc::boxed::Box;
use alloc::string::String;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid over-rotation pair ({crossings}, {period}): need 0 < crossings <= period/2")]
    InvalidPair { crossings: u64, period: u64 },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("divergent pattern forces a horseshoe; every over-rotation number in [0, 1/2] is realized")]
    Horseshoe,

    #[error("period-1 pattern carries no over-rotation pair")]
    FixedPointPattern,

    #[error("need coprime 0 < p/q <= 1/2, got p={p}, q={q}")]
    RotationDomain { p: i64, q: i64 },

    #[error("rotation number out of range (0, 1/2]")]
    RhoOutOfRange,

    #[error("period {n} outside the supported census range 2..=12")]
    CensusBound { n: usize },

    #[error("markers must include the fixed point {0}")]
    MissingFixedPoint(String),

    #[error("graph has no directed cycle")]
    AcyclicGraph,

    #[error("critical orbit not finite within {budget} iterates")]
    InfiniteCriticalData { budget: usize },

    #[error("f(c) <= c: every periodic point is fixed")]
    TrivialDynamics,

    #[error("map is not unimodal: {0}")]
    NotUnimodal(String),

    #[error("invalid piecewise-linear map: {0}")]
    InvalidMap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("admissible loop needs length >= 2")]
    LoopTooShort,

    #[error("kneading sequence does not determine a non-trivial interval: {0}")]
    TrivialKneading(String),

    #[error("fixed point is ambiguous: {0}")]
    FixedPointAmbiguity(String),

    #[error("turning points differ: {0} vs {1}")]
    TurningPointMismatch(String, String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        source: Box<Error>,
    },
}

impl Error {
    pub fn at(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }

    /// The innermost error with stage tags removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
