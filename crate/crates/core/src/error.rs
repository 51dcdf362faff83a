use thiserror::Error;

use crate::region::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: unexpected character {found:?}")]
    Syntax { line: usize, column: usize, found: char },
    #[error("region has no cells")]
    EmptyRegion,
    #[error("region footprint is not edge-connected")]
    DisconnectedRegion,
    #[error("defect {0} is not a cell of the region")]
    DefectOutside(Cell),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("no cover exists: {0}")]
    NoCover(String),
    #[error("node budget of {budget} exhausted")]
    ResourceLimit { budget: u64 },
    #[error("intersection graph contains an induced claw")]
    NotClawFree,
    #[error("cell count {0} is not divisible by 3")]
    SizeNotDivisible(usize),
    #[error("graph is not detachable")]
    NotDetachable,
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is detachable; an edge splits it into parts divisible by 3")]
    DetachableTree,
    #[error("defects are not supported by this operation")]
    DefectsUnsupported,
    #[error("malformed tiling: {0}")]
    MalformedTiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
