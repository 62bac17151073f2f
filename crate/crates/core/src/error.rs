use thiserror::Error;

use crate::poly::{Factorization, Poly};

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report. Variants are structured so a front
/// end can serialize them without string matching.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    DescriptorMismatch,
    #[error("an n-field needs at least two components, got {0}")]
    ArityTooSmall(usize),
    #[error("components {0} and {1} are not mutually non-embeddable")]
    ContainmentViolation(usize, usize),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("value not in field: {0}")]
    NotInField(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("field of size {size} exceeds the configured cap {cap}")]
    FieldTooLarge { size: u64, cap: u64 },

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("operation requires characteristic zero")]
    PositiveCharacteristic,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("factorization incomplete: some factors may be reducible")]
    FactorizationIncomplete(Box<Factorization>),
    #[error("duplicate interpolation abscissa")]
    DuplicateAbscissa,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vectors do not form a basis")]
    NotABasis,
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("objects are defined over different fields")]
    FieldMismatch,

    #[error("polynomial {factor} does not split into linear factors")]
    SplitFailure { factor: Poly },
    #[error("minimal polynomial factorization is incomplete")]
    NeedsFactorization,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("subspaces do not form a direct sum: {0}")]
    NotADirectSum(String),
    #[error("operators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("operator {0} is not diagonalizable")]
    NotDiagonalizable(usize),

    #[error("field has no ordering compatible with an inner product")]
    UnorderedField,
    #[error("input vectors are linearly dependent")]
    DependentInput,
    #[error("operator is not self-adjoint")]
    NotSelfAdjoint,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("field has characteristic two")]
    CharacteristicTwo,
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::DescriptorMismatch => "DescriptorMismatch",
            Error::ArityTooSmall(_) => "ArityTooSmall",
            Error::ContainmentViolation(..) => "ContainmentViolation",
            Error::Syntax(_) => "SyntaxError",
            Error::NotInField(_) => "NotInField",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::BothZero => "BothZero",
            Error::PositiveCharacteristic => "PositiveCharacteristic",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::FactorizationIncomplete(_) => "FactorizationIncomplete",
            Error::DuplicateAbscissa => "DuplicateAbscissa",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotABasis => "NotABasis",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::FieldMismatch => "FieldMismatch",
            Error::SplitFailure { .. } => "SplitFailure",
            Error::NeedsFactorization => "NeedsFactorization",
            Error::NotInvariant => "NotInvariant",
            Error::NotADirectSum(_) => "NotADirectSum",
            Error::NotCommuting(..) => "NotCommuting",
            Error::NotDiagonalizable(_) => "NotDiagonalizable",
            Error::UnorderedField => "UnorderedField",
            Error::DependentInput => "DependentInput",
            Error::NotSelfAdjoint => "NotSelfAdjoint",
            Error::NotSymmetric => "NotSymmetric",
            Error::CharacteristicTwo => "CharacteristicTwo",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::Internal(_) => "Internal",
        }
    }
}
