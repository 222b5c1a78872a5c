use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Composing morphisms whose codomain/domain do not line up.
    #[error("composition error: codomain [{left_cod}] does not match domain [{right_dom}]")]
    Composition { left_cod: usize, right_dom: usize },

    /// A permutation or point was applied to data of the wrong size.
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    /// An operation needed more levels than a truncated sequence provides.
    #[error("truncation error: level {needed} requested but only {available} available")]
    Truncation { needed: usize, available: usize },

    /// A gamma table is missing an entry required by the checker.
    #[error("incomplete data: {0}")]
    IncompleteData(String),

    /// Arities of operad points do not match.
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    /// Smash factors indexed by different finite sets.
    #[error("mismatched index sets: {0}")]
    IndexMismatch(String),

    /// A map descriptor was applied to a point it is not typed for.
    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    /// A connectivity hypothesis does not apply to the requested input range.
    #[error("hypothesis not applicable: {0}")]
    HypothesisNotApplicable(String),

    /// Structurally invalid data (failed invariant on construction).
    #[error("invalid data: {0}")]
    InvalidData(String),
}
