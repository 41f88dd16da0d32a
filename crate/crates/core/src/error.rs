use thiserror::Error;

use crate::drawing::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse scalar {0:?} (expected \"p\" or \"p/q\")")]
    BadScalar(String),

    #[error("malformed instance: {0}")]
    BadInstance(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("drawing is not planar: {} violation(s), first: {}", .0.len(), .0[0])]
    NotPlanar(Vec<Violation>),

    #[error("drawings are not isomorphic: {0}")]
    NotIsomorphic(String),

    #[error("vertex set is not a single connected component")]
    Disconnected,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("clearance search exhausted after {rounds} refinements: {last}")]
    ScheduleExhausted { rounds: u32, last: String },

    #[error("permutation sampling failed after {0} attempts")]
    SamplingFailed(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
