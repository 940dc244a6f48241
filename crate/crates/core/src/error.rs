use alloc::string::String;
use core::fmt;

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Syntax(SyntaxError),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("squarefree of zero")]
    SquarefreeOfZero,
    #[error("duplicate interpolation nodes")]
    DuplicateNodes,
    #[error("insufficient interpolation points: need {needed}, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("denominator has factors without roots in Q(n)")]
    UnsupportedDenominator,
    #[error("affine relation needs a non-constant base argument")]
    ConstantBase,
    #[error("affine class member with non-positive dilation")]
    NegativeDilation,
    #[error("pole: {0}")]
    Pole(String),
    #[error("singular term at k = {k}, n = {n}")]
    SingularTerm { k: u64, n: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl From<SyntaxError> for Error {
    fn from(e: SyntaxError) -> Self {
        Error::Syntax(e)
    }
}
