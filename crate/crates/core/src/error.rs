use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition at index {index}: {reason}")]
    InvalidPartition { index: usize, reason: String },

    #[error("length mismatch: expected {expected} coordinates, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("layer {k} is out of range (the dominating sequence stops at N = {n})")]
    LayerOutOfRange { k: usize, n: usize },

    #[error("partition {0} is not reduced by translation (last part must be 0); reduce it first")]
    NotReduced(String),

    #[error("degenerate polytope: {0}")]
    Degenerate(String),

    #[error("point {point:?} does not lie in {polytope}")]
    PointOutside { point: Vec<u32>, polytope: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("enumeration needs {needed} lattice points, above the cap of {cap} (raise NEWTON_EHRHART_MAX_POINTS)")]
    TooLarge { needed: String, cap: u64 },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
