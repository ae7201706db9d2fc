use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
    #[error("Weyl group elements belong to different types")]
    TypeMismatch,
    #[error("group order {order} exceeds enumeration bound {bound}")]
    EnumerationBound { order: u64, bound: u64 },
    #[error("factorization over the rationals needs an irreducible factor of degree > 2 or too large coefficients")]
    RationalsFactorLimit,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("quotient is not finite dimensional within degree cap {0}")]
    NotFiniteDimensional(usize),
    #[error("relation {0} is not admissible")]
    InadmissibleRelation(usize),
    #[error("ideal contains the unit")]
    ImproperIdeal,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("characteristic {p} is not larger than the algebra dimension {dim}")]
    SmallCharacteristic { p: u64, dim: usize },
    #[error("semisimple quotient does not split over the base field")]
    NonSplit,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("presentation does not reconcile within degree cap {0}")]
    PresentationCapExceeded(usize),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("structure constants violate {0}")]
    InvalidAlgebra(String),
    #[error("action matrices violate {0}")]
    InvalidModule(String),
    #[error("map does not intertwine the module actions")]
    NotAModuleMap,
    #[error("homological cutoff {0} exceeded")]
    CutoffExceeded(usize),
    #[error("isomorphism could not be verified")]
    IsoNotVerified,
    #[error("algebra is not Iwanaga-Gorenstein within cutoff {0}")]
    NotGorensteinWithinCutoff(usize),
    #[error("module is not an object of the subcategory: {0}")]
    MembershipViolated(String),
    #[error("anti-involution does not preserve the defining relations")]
    AntiInvolution,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
