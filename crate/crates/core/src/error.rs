use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} outside supported range 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("negative Dynkin label in {0:?}")]
    NegativeLabel(Vec<i64>),

    #[error("height {height} of the horizontal weight exceeds level {level}")]
    HeightExceedsLevel { height: i64, level: i64 },

    #[error("weight {0:?} lies in the wrong congruence class for this orbit")]
    WrongCongruenceClass(Vec<i64>),

    #[error("{parts} parts do not fit {vars} variables")]
    TooManyParts { parts: usize, vars: usize },

    #[error("evaluation point entries must be nonzero")]
    ZeroEvaluationEntry,

    #[error("evaluation point entries must be pairwise distinct")]
    RepeatedEvaluationEntries,

    #[error("division by a series whose constant term is not a unit")]
    NonUnitConstant,

    #[error("order {requested} exceeds the enumerated depth {available}")]
    DepthExceeded { requested: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
