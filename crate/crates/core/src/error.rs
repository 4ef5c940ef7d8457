use thiserror::Error;

/// Errors raised by the permpoly library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("malformed cycle notation: {0}")]
    Malformed(String),

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),

    #[error("not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: u128, cap: usize },

    #[error("permutation {0} is not a member of the group")]
    NotMember(String),

    #[error("{count} nontrivial cycles exceed the limit of {limit}")]
    TooManyCycles { count: usize, limit: usize },

    #[error("group is not transitive")]
    Intransitive,

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown catalog entry: {0}")]
    UnknownCatalog(String),

    #[error("vertices must be distinct")]
    EqualVertices,

    #[error("{0} has no nontrivial disjoint factorization in the group")]
    NoDisjointFactorization(String),

    #[error("distribution mode mismatch")]
    ModeMismatch,

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("exact mode limited to |G| <= {max_order} and k <= {max_steps}")]
    ExactCapExceeded { max_order: usize, max_steps: usize },

    #[error("group spec: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
