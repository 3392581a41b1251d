use alloc::string::String;
use alloc::vec::Vec;

/// Everything that can go wrong across the library. Mathematically impossible
/// situations (violated algebraic identities) surface as `Invariant` rather than panics so
/// callers can report them.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("extension degree {0} outside the supported range 1..=16")]
    DegreeOutOfRange(u32),
    #[error("field with {p}^{degree} elements exceeds the supported size")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("{0} is not a subfield size of this tower")]
    NotASubfieldSize(u64),
    #[error("F_{to} is not a subfield of F_{from} inside this tower")]
    NotASubfieldExtension { from: u64, to: u64 },
    #[error("element lies outside the requested subfield")]
    NotInSubfield,
    #[error("discrete log has no solution in the cycle of the given base")]
    DlogNoSolution,
    #[error("points are not pairwise distinct")]
    PointsNotDistinct,
    #[error("matrix (a b; c d) with ad - bc = 0 does not define a projective map")]
    SingularMap,
    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("F_{q0} is not a proper subfield of F_{q}")]
    NotAProperSubfield { q: u64, q0: u64 },
    #[error("all coefficients are zero")]
    ZeroCoefficients,
    #[error("projective point from the zero vector")]
    ZeroVector,
    #[error("elements are linearly dependent over the base subfield")]
    DependentBasis,
    #[error("generator rows are linearly dependent over the alphabet")]
    DependentRows,
    #[error("generator entry lies outside the alphabet subfield")]
    EntryOutsideAlphabet,
    #[error("constacyclic multiplier must be a nonzero alphabet element")]
    InvalidMultiplier,
    #[error("enumeration needs {needed} codewords but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("alphabet of size {0} is too large for table-driven enumeration")]
    AlphabetTooLarge(u64),
    #[error("a tally overflowed the machine-word counter")]
    TallyOverflow,
    #[error("{min_words} minimum words do not split into scalar classes of size {q} - 1")]
    ScalarClassMismatch { min_words: u64, q: u64 },
    #[error("blocks do not all have the same size")]
    MixedBlockSizes,
    #[error("block index {index} outside point range 0..{v}")]
    BlockOutOfRange { index: u16, v: u16 },
    #[error("t = {t} exceeds the block size {k}")]
    InvalidT { t: usize, k: usize },
    #[error("plane section of size {0} (an ovoid section must have size 1 or q + 1)")]
    SectionSizeInvalid(usize),
    #[error("no unit with the required order found within {bound} steps")]
    CSearchExhausted { bound: u64 },
    #[error("the requested multiplier is a square, so no such code exists")]
    LambdaIsSquare,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("classification failed at {stage}: message {message:?}, zero set {zero_set:?}")]
    ClassificationFailed {
        stage: String,
        message: Vec<u16>,
        zero_set: Vec<u16>,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;
