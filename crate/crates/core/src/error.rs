use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Verification outcomes (a failed completeness check, a wall with a negative
/// coefficient, ...) are reported through report structs, not through this
/// type. An `Error` always means the input was unusable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin component `{component}`: {reason}")]
    InvalidComponent { component: String, reason: String },

    #[error("cannot parse Dynkin type `{0}`")]
    Parse(String),

    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("index sets overlap: {0}")]
    OverlappingIndexSets(String),

    #[error("matrix is singular")]
    Singular,

    #[error("pairing needs one weight-side and one coweight-side vector, got {0:?} and {1:?}")]
    PairingSides(crate::cartan::Basis, crate::cartan::Basis),

    #[error("{op} is limited to {limit}, got {got}; {hint}")]
    Guard {
        op: &'static str,
        limit: usize,
        got: usize,
        hint: &'static str,
    },

    #[error("cone is not maximal (dimension {dim}, rank {rank})")]
    NotMaximal { dim: usize, rank: usize },

    #[error("wall relation kernel has dimension {0}, expected 1")]
    DegenerateWall(usize),

    #[error("vector is not a ray of the fan")]
    NotARay,

    #[error("point is not in the Peterson variety")]
    NotInPeterson,

    #[error("Δ and q vanish simultaneously at index {0}")]
    SimultaneousZero(usize),

    #[error("matrix must have determinant 1")]
    NotSpecialLinear,

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("sampling gave up after {0} rejected draws")]
    SamplingExhausted(usize),

    #[error("rank {0} is not supported here")]
    UnsupportedRank(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
