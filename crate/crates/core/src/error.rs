//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("bialgebra has no antipode")]
    NoAntipode,

    #[error("antipode is not invertible")]
    AntipodeNotInvertible,

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("module is not in the cocommutativity class")]
    NotInCCClass,

    #[error("the two unit morphisms differ")]
    UnitMismatch,

    #[error("parse error: {0}")]
    Parse(String),
}
