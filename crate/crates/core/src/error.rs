use thiserror::Error;

pub type Result<T, E = CliffordError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliffordError {
    #[error("a signature needs at least one generator (p + q = 0)")]
    EmptySignature,

    #[error("{n} generators requested, at most {max} are supported")]
    TooManyGenerators { n: usize, max: usize },

    #[error("index {index} is out of range for {n} generators")]
    IndexOutOfRange { index: u64, n: usize },

    #[error("generator count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("signature mismatch: ({0}, {1}) vs ({2}, {3})")]
    SignatureMismatch(usize, usize, usize, usize),

    #[error("ordering convention mismatch")]
    ConventionMismatch,

    #[error("grade {k} is out of range for {n} generators")]
    GradeOutOfRange { k: usize, n: usize },

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operand is not a 1-vector (nonzero coefficient on blade index {0})")]
    NotAVector(usize),

    #[error("axis must have unit length, |w| = {0}")]
    NonUnitAxis(f64),

    #[error("rotation requires a unit quaternion, |h| = {0}")]
    NonUnitQuaternion(f64),

    #[error("matrix shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("unknown representation `{0}`")]
    UnknownRepresentation(String),

    #[error("{n} generators exceeds the cap of {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("invalid document: {0}")]
    InvalidDocument(String),
}
