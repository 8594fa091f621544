use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("map is constant")]
    ConstantMap,
    #[error("unresolved factor of degree {degree}: {poly}")]
    UnresolvedBlock { degree: usize, poly: String },
    #[error("degenerate parameter {value} for family {family}: {reason}")]
    DegenerateParameter {
        family: String,
        value: String,
        reason: String,
    },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("declared degree {declared} disagrees with elimination degree {generic} (+{infinity} at infinity)")]
    DegreeMismatch {
        declared: usize,
        generic: usize,
        infinity: usize,
    },
    #[error("v = 0: the function factors through the x-line")]
    VZeroPath,
    #[error("ramification bookkeeping failed: {0}")]
    BookkeepingFailure(String),
    #[error("points coincide")]
    CoincidentPoints,
    #[error("cross-ratio value {0} is degenerate (0, 1 or infinity)")]
    DegenerateValue(String),
    #[error("expected four critical values, found {0}")]
    NotFourValues(usize),
    #[error("elimination degree estimate {estimate} exceeds budget {budget}")]
    DegreeBudgetExceeded { estimate: usize, budget: usize },
    #[error("sample {0} is degenerate")]
    DegenerateSample(String),
    #[error("sample count {given} does not exceed the degree bound {bound}")]
    InsufficientSamples { given: usize, bound: usize },
    #[error("malformed permutation tuple: {0}")]
    MalformedTuple(String),
    #[error("braid action needs a 4-tuple and generator index 1..=3 (got arity {arity}, index {index})")]
    WrongArity { arity: usize, index: usize },
    #[error("degree {degree} exceeds enumeration budget {budget}")]
    BudgetExceeded { degree: usize, budget: usize },
    #[error("syntax error at offset {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("too many variables: {0:?}")]
    MultipleVariables(Vec<String>),
    #[error("surd radicands differ: {0} vs {1}")]
    RadicandMismatch(String, String),
    #[error("operation does not apply to family {0}")]
    WrongFamily(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
