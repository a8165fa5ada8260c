use thiserror::Error;

/// Errors raised by the library.
///
/// Resource limits (`CapExceeded`, `BudgetExceeded`) are kept distinct from
/// answers: a search that ran out of room never reports "no".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("{what}: size {actual} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("{what}: search budget of {budget} nodes exhausted")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("invalid bramble: {0}")]
    InvalidBramble(String),

    #[error("path does not meet bramble element {element}")]
    PathNotHitting { element: usize },

    #[error("bramble order {actual} is below the required {needed}")]
    InsufficientOrder { needed: usize, actual: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bound is symbolic and cannot be checked numerically: {0}")]
    Symbolic(String),

    /// An assembled certificate failed its own validation.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors that signal an exhausted resource limit rather than
    /// a definite answer.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::BudgetExceeded { .. })
    }
}

pub(crate) fn check_cap(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
