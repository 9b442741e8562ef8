use thiserror::Error;

use crate::set::LabelSet;
use crate::split::ClosureCase;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} has {got} entries, at most {max} are supported")]
    TooLarge {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("ground set has {size} elements, enumeration cap is {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },

    #[error("label `{0}` already belongs to the ground set")]
    LabelCollision(String),

    #[error("element `{0}` is not in X")]
    ElementNotInX(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{} is not a flat of the base matroid", .0)]
    BaseNotFlat(LabelSet),

    #[error(
        "closure formulas disagree on {query}: {} gives {}, {} gives {}",
        .first.0, .first.1, .second.0, .second.1
    )]
    FormulaDisagreement {
        query: LabelSet,
        first: (ClosureCase, LabelSet),
        second: (ClosureCase, LabelSet),
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
