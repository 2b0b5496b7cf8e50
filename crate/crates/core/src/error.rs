use thiserror::Error;

/// Why a candidate split of a unitary polynomial was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoFactorReason {
    /// The equation that fixes the leading coefficient of the inner factor
    /// has a zero denominator.
    LambdaUndefined,
    /// The top coefficient disagrees with `mu_m * lambda^m`.
    LeadingCheck,
    /// A middle coefficient `c_j` disagrees with its forced value.
    MiddleCoefficient { j: usize },
}

impl std::fmt::Display for NoFactorReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoFactorReason::LambdaUndefined => write!(f, "lambda undefined"),
            NoFactorReason::LeadingCheck => write!(f, "leading coefficient check failed"),
            NoFactorReason::MiddleCoefficient { j } => {
                write!(f, "middle coefficient check failed at x^{j}")
            }
        }
    }
}

/// Which step of free monoid factorization rejected the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FreeMonoidStage {
    Head,
    Strip,
}

impl std::fmt::Display for FreeMonoidStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FreeMonoidStage::Head => write!(f, "head"),
            FreeMonoidStage::Strip => write!(f, "strip"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not unitary: {0}")]
    NotUnitary(String),
    #[error("identity has no ratio form")]
    IdentityHasNoRatioForm,
    #[error("no pre-leading term")]
    NoPreleadingTerm,
    #[error("multi-index norm {norm} exceeds {m}")]
    MultiIndexTooLarge { norm: usize, m: usize },
    #[error("invalid split shape: degree {e_deg} for a polynomial of degree {d}")]
    InvalidSplitShape { d: usize, e_deg: usize },
    #[error("no factor ({0})")]
    NoFactor(NoFactorReason),
    #[error("not in M ({0})")]
    NotInFreeMonoid(FreeMonoidStage),
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("degenerate; use scalar path (n = {n})")]
    Degenerate { n: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not in P: {0}")]
    NotInP(String),
    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for broken internal invariants (as opposed to bad input or a
    /// negative mathematical answer).
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    /// True for answers that are mathematically negative but not failures.
    pub fn is_negative_answer(&self) -> bool {
        matches!(self, Error::NoFactor(_) | Error::NotInFreeMonoid(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
