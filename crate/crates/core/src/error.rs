//! Structural errors.
//!
//! A structural error means the input cannot even be interpreted as the
//! kind of structure it claims to be (dangling ids, wrong table shapes,
//! mismatched boundaries). Law violations of well-formed data are reported
//! through [`crate::report::ValidationReport`] instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("{what}: expected {expected} entries, found {found}")]
    Shape {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("{what}: id {id} out of range (< {bound})")]
    OutOfRange {
        what: String,
        id: usize,
        bound: usize,
    },

    #[error("boundary mismatch: {0}")]
    Boundary(String),

    #[error("missing {0}")]
    Missing(String),

    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },

    #[error("no icon can exist: object maps disagree at `{0}`")]
    ObjectMapsDisagree(String),

    #[error("expected a one-object bicategory, found {0} objects")]
    NotOneObject(usize),

    #[error("unsupported setting: {0}")]
    UnsupportedSetting(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = StructureError> = std::result::Result<T, E>;

/// Failure of a constructor that also certifies coherence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Structure(#[from] StructureError),

    #[error("construction is not coherent:\n{0}")]
    Incoherent(crate::report::ValidationReport),
}
