use thiserror::Error;

/// Errors surfaced by the library. `InvariantViolation` is reserved for
/// conditions the underlying theorems guarantee cannot occur: seeing one
/// means the implementation, not the input, is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the other")]
    NotContained,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("parameter of a one-parameter subgroup must be nonzero")]
    ZeroParameter,
    #[error("matrix is singular")]
    Singular,
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("central character of this representation is zero")]
    ZeroCharacter,
    #[error("element has a negative-degree component")]
    NotInParabolic,
    #[error("element is not semisimple")]
    NotSemisimple,
    #[error("required eigenvectors are not rational")]
    IrrationalSpectrum,
    #[error("no eigenvector selection completes the basis")]
    DegenerateSelection,
    #[error("defining vector pairs negatively with character {0:?}")]
    NotInPositiveCone(Vec<i64>),
    #[error("support dimension gap is below two")]
    NoRoom,
    #[error("stabilizer subspace is not contained in the d-stabilizers")]
    KNotContained,
    #[error("vanishing-order precheck failed: {0}")]
    PrecheckFailed(String),
    #[error("direction is not tangent to the orbit")]
    NotTangent,
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invariant violation (this is a bug): {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
