use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown model `{given}` (valid models: {valid})")]
    UnknownModel { given: String, valid: String },

    #[error("malformed {what} `{input}`: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("duplicate step ({0}, {1}) in step set")]
    DuplicateStep(i64, i64),

    #[error("step set is empty")]
    EmptyStepSet,

    #[error("matrix has determinant {0}; lattice isometries need determinant +1 or -1")]
    NotUnimodular(i64),

    #[error("not a reflection: {0}")]
    NotAReflection(String),

    #[error("multiplicity system is rank deficient ({rank} < 3 or more than 3 steps); use the slice invariance check instead")]
    RankDeficient { rank: usize },

    #[error("brute force would enumerate {requested} sequences (cap {cap}); use the dynamic-programming counts")]
    BruteForceCap { requested: u128, cap: u128 },

    #[error("group is infinite or was truncated; orbit sums need a finite element set")]
    InfiniteGroup,

    #[error("no published matrices for model `{0}`")]
    NoPublishedGroup(String),

    #[error("arrangement not supported: {0}")]
    Arrangement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
