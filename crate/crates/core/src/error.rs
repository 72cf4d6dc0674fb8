//! Error type shared by the whole crate.

use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operator does not preserve the module: {witness}")]
    NotPreserving { witness: String },
    #[error("bracket leaves the span: {pair}")]
    NotClosed { pair: String },
    #[error("operator is not homogeneous")]
    Inhomogeneous,
    #[error("input is not homogeneous in the required grading")]
    InhomogeneousInput,
    #[error("search exceeded cap {cap}: {what}")]
    CapExceeded { what: String, cap: usize },
    #[error("family {family} does not act on module {module}")]
    FamilyModuleMismatch { family: String, module: String },
    #[error("case outside the supported scope: {0}")]
    CaseOutsideScope(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operator is not expressible: {0}")]
    Inexpressible(String),
}

pub type Result<T> = core::result::Result<T, Error>;
