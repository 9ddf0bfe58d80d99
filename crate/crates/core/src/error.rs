use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient context mismatch: {0} vs {1} symbols")]
    ContextMismatch(usize, usize),
    #[error("division by a non-unit coefficient")]
    NonUnitDivision,
    #[error("invalid parameter context: {0}")]
    BadContext(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` has no assigned value")]
    UnassignedSymbol(String),
    #[error("symbol `{0}` assigned zero; parameters are invertible")]
    ZeroAssignment(String),
    #[error("rewrite budget of {0} steps exhausted")]
    FuelExhausted(u64),
    #[error("negative exponent on polynomial generator `{0}`")]
    NegativeExponent(String),
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("bad parameter matrix: {0}")]
    BadMatrix(String),
    #[error("lambda must be nonzero")]
    DegenerateLambda,
    #[error("missing rule pair ({0}, {1})")]
    MissingRulePair(String, String),
    #[error("swap coefficient for ({0}, {1}) is not a unit monomial")]
    NonUnitSwap(String, String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("genericity unverified: {0}")]
    GenericityUnverified(String),
    #[error("certificate failed to verify: {0}")]
    VerificationFailed(String),
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
