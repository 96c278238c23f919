//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The graph would not fit in the fixed 64-vertex representation.
    #[error("order {order} exceeds the capacity of {max} vertices")]
    Capacity { order: usize, max: usize },

    /// An enumeration-based operation refused to run on an input this large.
    #[error("order {order} exceeds the {what} guard of {guard} vertices ({advice})")]
    EnumerationGuard {
        what: &'static str,
        order: usize,
        guard: usize,
        advice: &'static str,
    },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid generalized Petersen parameters n={n}, k={k}: need n >= 3, k >= 1 and 2k < n")]
    PetersenParameters { n: usize, k: usize },

    /// A parameter is outside the range for which a family, closed form or
    /// reference labeling is defined.
    #[error("{what} is not defined for n={n}: requires {requirement}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        requirement: &'static str,
    },

    #[error("labeling is not a bijection onto 1..={order}")]
    NotBijective { order: usize },

    #[error("labeling has {got} entries but the graph has order {order}")]
    LabelingSizeMismatch { order: usize, got: usize },

    #[error("subset has {got} vertices, expected {expected}")]
    SubsetSize { expected: usize, got: usize },

    #[error("cut side must be a nonempty proper subset of the vertices")]
    ImproperCutSide,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid graph JSON: {0}")]
    InvalidJson(String),
}

impl Error {
    /// True for errors that mean "the input is too large for this operation",
    /// as opposed to malformed input.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. } | Error::EnumerationGuard { .. }
        )
    }
}
