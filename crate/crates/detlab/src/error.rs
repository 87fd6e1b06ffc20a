use thiserror::Error;

/// Errors surfaced through `Result`. Programmer errors (mixing ring
/// contexts inside a computation, out-of-range indices in internal
/// calls) panic instead; these variants cover data-dependent failures
/// that a caller can meaningfully handle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("matrix is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("matrix shape violation: {0}")]
    Shape(String),

    #[error("entries must be linear forms for a 1-genericity test")]
    NotLinear,

    #[error("scalar matrix is singular")]
    Singular,

    #[error("ideal is not saturated")]
    Unsaturated,

    #[error("hyperplane must be a nonzero linear form")]
    NotLinearForm,

    #[error("no regular linear form found after {0} retries (non-generic seed)")]
    NonGenericSeed(u32),

    #[error("module elements must be homogeneous with respect to the twists")]
    InhomogeneousModuleElement,

    #[error("resolution is not minimal")]
    NotMinimal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    TooLarge(String),

    #[error("unknown catalog id `{0}`")]
    UnknownExample(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
