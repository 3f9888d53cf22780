use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={nvars}")]
    VariableIndex { index: usize, nvars: usize },

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("multiplicity of the unit monomial is undefined")]
    UnitMonomial,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("total degree exceeds {max}")]
    DegreeOverflow { max: u64 },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("polynomial is not normalized (leading coefficient 1, zero constant term)")]
    NotNormalized,

    #[error("{k} is not a divisor > 1 of the leading multiplicity {multiplicity}")]
    InvalidDivisor { k: u32, multiplicity: u32 },

    #[error("operation requires a degree-compatible (graded) monomial order")]
    OrderNotGraded,

    #[error("enumeration of {estimated} items exceeds the cap of {cap}")]
    EnumerationCap { estimated: u128, cap: usize },

    #[error("monomial is not a potential leading term of the polynomial")]
    NotPotentialLeading,

    #[error("monomial is not in the support")]
    NotInSupport,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid monoid generators: {0}")]
    InvalidGenerators(String),

    #[error("malformed decomposition data: {0}")]
    MalformedData(String),

    /// Signals a broken internal invariant, never a user mistake.
    #[error("internal verification failure: {0}")]
    Verification(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Verification(_))
    }
}
