use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("`{0}` is not a root of this system")]
    NotARoot(String),

    #[error("type {cartan_type} expects {expected} weight labels, got {got}")]
    LabelArity {
        cartan_type: String,
        expected: usize,
        got: usize,
    },

    #[error("nonzero weight required")]
    ZeroWeight,

    #[error("max rank {requested} outside 1..={cap}")]
    RankCap { requested: usize, cap: usize },

    #[error(
        "condition (C) = {from_roots} from roots but condition (D) = {from_table} from the table for {cartan_type} {labels}"
    )]
    ConditionMismatch {
        cartan_type: String,
        labels: String,
        from_roots: bool,
        from_table: bool,
    },

    #[error("polynomial ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("explicit derivations for type {family} need rank >= {min}, got {ell}")]
    ExampleRank { family: char, ell: usize, min: usize },

    #[error("no explicit derivations for type {0}; only B and D are constructed")]
    NoExplicitDerivations(char),

    #[error("malformed presentation: {0}")]
    Presentation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
