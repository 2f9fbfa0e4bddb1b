use thiserror::Error;

/// Errors produced by the solver and its building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A connected component is a single edge; no weighting can separate
    /// its two endpoints.
    #[error("component {component:?} is an isolated edge")]
    IsolatedEdge { component: Vec<usize> },

    /// An object whose existence the construction relies on could not be
    /// found by the implemented search.
    #[error("theory gap on component {component:?}: {detail}")]
    TheoryGap {
        component: Vec<usize>,
        detail: String,
    },

    /// The residual flip did not enlarge the cut.
    #[error("cut could not be improved (size {size})")]
    NoImprovement { size: usize },

    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure {
    ($cond:expr, $variant:ident, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::$variant(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure;
