use thiserror::Error;

/// Errors raised across the toolkit. Each variant carries a stable
/// machine-readable code (see [`Error::code`]) that the command line
/// surfaces verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("generator {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("cone generators are linearly dependent")]
    IndependenceViolation,
    #[error("index {index} out of range for {len} rays")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("partial degree assignment leaves {free} free directions")]
    Underdetermined { free: usize },
    #[error("partial degree assignment has no kernel extension")]
    Inconsistent,
    #[error("completed degree vector is not integral")]
    NonIntegral,
    #[error("degree entries must be positive")]
    NonPositive,
    #[error("degree vector is not in the kernel of the generator matrix")]
    NotInKernel,
    #[error("expected {expected} entries, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("configuration has {found} coordinates, fan has {expected} rays")]
    SizeMismatch { expected: usize, found: usize },
    #[error("polynomial {index} is not monic of degree {degree}")]
    NotMonic { index: usize, degree: usize },
    #[error("increment is not a positive kernel vector")]
    NonKernelIncrement,
    #[error("stabilization points must be {expected} distinct values")]
    DuplicatePoints { expected: usize },
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("fan has no primitive collection (its complex is a full simplex)")]
    NoPrimitiveCollection,
    #[error("generators do not span the integer lattice")]
    Condition1Failed,
    #[error("no degree vector with all entries positive exists")]
    Condition2Failed,
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("fan is invalid: {0}")]
    InvalidFan(String),
    #[error("k = {k} outside 1..={d_min}")]
    KOutOfRange { k: i64, d_min: u64 },
    #[error("{r} rays exceed the cap of {cap}")]
    TooManyRays { r: usize, cap: usize },
    #[error("value out of supported range")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::ZeroVector => "ZERO_VECTOR",
            Error::NotPrimitive(_) => "NOT_PRIMITIVE",
            Error::IndependenceViolation => "INDEPENDENCE_VIOLATION",
            Error::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            Error::Underdetermined { .. } => "UNDERDETERMINED",
            Error::Inconsistent => "INCONSISTENT",
            Error::NonIntegral => "NON_INTEGRAL",
            Error::NonPositive => "NON_POSITIVE",
            Error::NotInKernel => "NOT_IN_KERNEL",
            Error::DegreeMismatch { .. } => "DEGREE_MISMATCH",
            Error::SizeMismatch { .. } => "SIZE_MISMATCH",
            Error::NotMonic { .. } => "NOT_MONIC",
            Error::NonKernelIncrement => "NON_KERNEL_INCREMENT",
            Error::DuplicatePoints { .. } => "DUPLICATE_POINTS",
            Error::NonPositiveRadius => "NON_POSITIVE_RADIUS",
            Error::NoPrimitiveCollection => "NO_PRIMITIVE_COLLECTION",
            Error::Condition1Failed => "CONDITION_1_FAILED",
            Error::Condition2Failed => "CONDITION_2_FAILED",
            Error::NotSmooth => "NOT_SMOOTH",
            Error::InvalidFan(_) => "INVALID_FAN",
            Error::KOutOfRange { .. } => "K_OUT_OF_RANGE",
            Error::TooManyRays { .. } => "TOO_MANY_RAYS",
            Error::Overflow => "OVERFLOW",
            Error::Parse(_) => "PARSE_ERROR",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
