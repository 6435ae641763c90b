use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("origin is not strictly interior to the polytope")]
    OriginNotInterior,
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("simplex vertices are linearly dependent")]
    DegenerateSimplex,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable lists differ")]
    VariableMismatch,
    #[error("substitution does not cover variable `{0}`")]
    IncompleteSubstitution(String),
    #[error("exact division failed")]
    ExactDivisionFailed,
    #[error("invalid complete-intersection spec: {0}")]
    InvalidSpec(String),
    #[error("k = 0 (projective space) is verified through the toric pipeline")]
    DegenerateKZero,
    #[error("input is not a smooth toric Fano polytope")]
    NotSmoothFano,
    #[error("invalid multiplicity M = {0}")]
    InvalidMultiplicity(i64),
    #[error("curve `{0}` has multiplicity M >= 2 but no recorded m")]
    MissingMultiplicity(String),
    #[error("anticanonical degree {0} is not positive and even")]
    OddDegree(i64),
    #[error("malformed input: {0}")]
    Malformed(String),
}
