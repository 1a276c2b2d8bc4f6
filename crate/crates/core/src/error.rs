use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the geometry, counting and parsing layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension {dim} exceeds the supported cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("dilation factor must be nonnegative (use a virtual polytope for formal negation)")]
    NegativeDilation,

    #[error("empty completion: polytope contains no lattice point")]
    EmptyCompletion,

    #[error("expected {expected} bodies, got {got}")]
    BodyCount { expected: usize, got: usize },

    #[error("at most {max} bodies allowed here, got {got}")]
    TooManyBodies { max: usize, got: usize },

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("parameter m = {m} out of range [2, {n}]")]
    PowerRange { m: usize, n: usize },

    #[error("polygon approximation needs k >= 3, got {k}")]
    PolygonTooCoarse { k: usize },

    #[error("precision must be at least 20 digits, got {got}")]
    PrecisionTooLow { got: u32 },

    #[error("operation requires ambient dimension {expected}, got {got}")]
    WrongAmbient { expected: usize, got: usize },

    #[error("operation needs ambient dimension at least {min}, got {got}")]
    AmbientTooSmall { min: usize, got: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,

    #[error("non-generic after retries")]
    NonGeneric,

    #[error("invalid rational literal `{text}`")]
    BadRational { text: String },

    #[error("malformed input in {path}: {message}")]
    BadInput { path: String, message: String },
}
