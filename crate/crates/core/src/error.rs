use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("dominance violated at index {index}: {detail}")]
    DominanceViolation { index: usize, detail: String },
    #[error("label cardinalities do not match Gl({m}|{n}): {detail}")]
    CardinalityMismatch { m: usize, n: usize, detail: String },
    #[error("weight is not maximal atypical")]
    NotMaximalAtypical,
    #[error("block is not maximal atypical (it has circles)")]
    NotMaximalAtypicalBlock,
    #[error("weights lie in different blocks")]
    DifferentBlocks,
    #[error("weights are incomparable in the Bruhat order")]
    Incomparable,
    #[error("weight is not a Kostant weight")]
    NotKostant,
    #[error("no sector with index {0}")]
    BadIndex(usize),
    #[error("diagram is fully nested, no reduction applies")]
    FullyNested,
    #[error("reduction revisited {0} while it was still being evaluated")]
    NonTermination(String),
    #[error("relation produced a non-positive multiplicity for {0}")]
    NonPositive(String),
    #[error("parts are not weakly decreasing at index {0}")]
    NonDominant(usize),
    #[error("partition violates the hook condition for Gl({m}|{n})")]
    HookViolation { m: usize, n: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
