use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("rows not independent")]
    DependentRows,

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for dimension {dim}")]
    PointOutOfRange { point: usize, dim: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid map: P(0) must be 0")]
    InvalidMap,

    #[error("degenerate: zero map has no level target")]
    DegenerateMap,

    #[error("invalid gadget parameters l={l}, k={k}: need 0 < l+1 < k")]
    GadgetParameters { l: usize, k: usize },

    #[error("code is not doubly even (level {level})")]
    NotDoublyEven { level: String },

    #[error("code has infinite level")]
    InfiniteLevel,

    #[error("factor set violates {condition} at {witness:?}")]
    FactorSetViolation {
        condition: &'static str,
        witness: Vec<usize>,
    },

    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("loop table invalid: {0}")]
    InvalidLoop(String),

    #[error("ill-defined {what} at {witness:?}")]
    IllDefined {
        what: &'static str,
        witness: Vec<usize>,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
