use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type mismatch: ({beta_left}; {gamma_left}) vs ({beta_right}; {gamma_right})")]
    TypeMismatch {
        beta_left: Partition,
        gamma_left: Partition,
        beta_right: Partition,
        gamma_right: Partition,
    },

    #[error("{gamma} is not contained in {beta}")]
    NotContained { beta: Partition, gamma: Partition },

    #[error("invalid indecomposable: {0}")]
    InvalidIndecomposable(String),

    #[error("inconsistent diagram: {0}")]
    InconsistentDiagram(String),

    #[error("move {0} is not applicable")]
    MoveNotApplicable(String),

    #[error("objects are isomorphic, no descent move exists")]
    NoDescentMove,

    #[error("the first object is not below the second in the hom order")]
    NotComparable,

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("{0} is not a prime")]
    InvalidPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn type_mismatch(
        left: &(Partition, Partition),
        right: &(Partition, Partition),
    ) -> Self {
        Error::TypeMismatch {
            beta_left: left.0.clone(),
            gamma_left: left.1.clone(),
            beta_right: right.0.clone(),
            gamma_right: right.1.clone(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
