//! Finite bicategories, lax functors, icons, and oplax transformations,
//! with exhaustive law checking.

pub mod bicat;
pub mod cat;
pub mod corpus;
pub mod criteria;
pub mod cylinder;
pub mod enumerate;
pub mod error;
pub mod icon;
pub mod internal;
pub mod laxfun;
pub mod monoidal;
pub mod nerve;
pub mod oplax;
pub mod oracle;
pub mod report;
pub mod search;

pub use bicat::{validate_bicategory, FiniteBicategory, OneCell, Strict2Category, TwoCell};
pub use cat::{FiniteCategory, Functor, MorId, NatTrans, ObjId};
pub use error::{BuildError, Result, StructureError};
pub use report::{Law, ValidationReport, Violation};
