use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("word is not positive: {0}")]
    NotPositive(String),

    #[error("element is not a summit element")]
    NotSummit,

    #[error("move not applicable: {0}")]
    MoveNotApplicable(&'static str),

    #[error("summit set exceeds {0} elements")]
    SummitSetTooLarge(usize),

    #[error("closure has {0} components, not a knot")]
    NotAKnot(u8),

    #[error("closure is the unknot")]
    IsUnknot,

    #[error("summit form is a pure power of d")]
    SylZero,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("no strictness pattern found")]
    NoPattern,

    #[error("search budget exceeded ({0} nodes)")]
    BudgetExceeded(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code used by the command line front end: syntax errors are 2,
    /// everything else is a domain error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } => 2,
            _ => 1,
        }
    }
}
