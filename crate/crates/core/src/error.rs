use thiserror::Error;

/// Every failure the engine can report.
///
/// Mathematical precondition failures carry the operation's own vocabulary
/// (`NotUnital`, `NotAnIdeal`, ...) so the CLI can surface them by name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (need a prime above 2, below 2^32)")]
    UnsupportedCharacteristic(u64),
    #[error("subspaces have different ambient dimensions ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("algebra has no unit element")]
    NotUnital,
    #[error("stated unit fails u*x = x*u = x")]
    BadUnit,
    #[error("map is not an involution")]
    NotAnInvolution,
    #[error("fixed space is not closed under the Jordan product")]
    NotClosed,
    #[error("value expected to be a scalar multiple of 1 is not")]
    NotScalar,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("eigenspaces of the idempotent do not span the algebra")]
    IncompletePeirce,
    #[error("algebra carries no Albert-type metadata")]
    NotAlbertType,
    #[error("algebra carries no spin-factor metadata")]
    NotSpinFactor,
    #[error("map is not a derivation")]
    NotADerivation,
    #[error("algebra is not associative")]
    NotAssociative,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("witness pair does not satisfy the invertible-values criterion")]
    CriterionNotSatisfied,
    #[error("space does not split as complement plus witness plane")]
    DegenerateSplit,
    #[error("albert witness recipe failed: {0}")]
    RecipeFailure(String),
    #[error("enumeration of {needed} candidates exceeds cap {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("operation requires a finite field")]
    NotFinite,
    #[error("identity check undecidable here: {0}")]
    Undecidable(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error{}: {message}", line_suffix(*.line))]
    Parse { line: usize, message: String },
}

impl Error {
    /// Short stable name used by the CLI on precondition failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotPrime(_) => "NotPrime",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::AmbientMismatch(..) => "AmbientMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::NotUnital => "NotUnital",
            Error::BadUnit => "BadUnit",
            Error::NotAnInvolution => "NotAnInvolution",
            Error::NotClosed => "NotClosed",
            Error::NotScalar => "NotScalar",
            Error::NotIdempotent => "NotIdempotent",
            Error::IncompletePeirce => "IncompletePeirce",
            Error::NotAlbertType => "NotAlbertType",
            Error::NotSpinFactor => "NotSpinFactor",
            Error::NotADerivation => "NotADerivation",
            Error::NotAssociative => "NotAssociative",
            Error::NotCommutative => "NotCommutative",
            Error::CriterionNotSatisfied => "CriterionNotSatisfied",
            Error::DegenerateSplit => "DegenerateSplit",
            Error::RecipeFailure(_) => "RecipeFailure",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotFinite => "NotFinite",
            Error::Undecidable(_) => "Undecidable",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::BadParams(_) => "BadParams",
            Error::Parse { .. } => "ParseError",
        }
    }
}

fn line_suffix(line: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!(" at line {line}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
