//! Error types shared across the crate.

use crate::module::Submodule;

/// Everything that can go wrong in the library.
///
/// Structural problems (malformed tables) are kept distinct from axiom
/// violations: a table that parses but fails associativity is *reported* by
/// [`crate::semiring::Semiring::verify_axioms`], not rejected here.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A table definition is shape-invalid: wrong arity, unknown label,
    /// duplicate carrier entries, and the like.
    #[error("malformed table: {0}")]
    Structural(String),

    /// The operation is not defined for this semiring kind (typically an
    /// exhaustive enumeration requested over an infinite carrier).
    #[error("unsupported operation `{op}` for semiring kind `{kind}`")]
    Unsupported { op: &'static str, kind: String },

    /// An exhaustive computation outgrew its configured budget. `count` is
    /// the number of elements produced before giving up.
    #[error("budget exceeded: {count} elements enumerated, cap was {cap}")]
    BudgetExceeded { count: usize, cap: usize },

    /// A stated precondition of a theorem operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// `direct_complement` found several candidates. Only possible when the
    /// ambient module has zero sums; uniqueness is a theorem otherwise.
    #[error("direct complement is not unique: {} candidates", candidates.len())]
    MultipleComplements { candidates: Vec<Submodule> },

    /// A self-check that should be unreachable fired. This indicates a bug
    /// in the library, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Invalid JSON input.
    #[error("invalid input: {0}")]
    Parse(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
