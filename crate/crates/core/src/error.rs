use thiserror::Error;

use crate::classifier::TnfKind;

/// Errors produced by the library.
///
/// The variants map one-to-one onto the CLI exit codes, so adding a variant
/// is a user-visible change.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("out of range: {0}")]
    Range(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("the family of induced {kind}-free graphs (k = {k}) is not feasible")]
    InfeasibleFamily { kind: TnfKind, k: usize },

    #[error("degenerate forbidden graph of order {order}: every non-empty graph contains it")]
    DegenerateForbidden { order: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
