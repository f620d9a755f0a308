//! Exact coefficient arithmetic shared by the diagram and representation
//! crates: Laurent polynomials, rational functions in `a`, cyclotomic
//! specializations, and dense linear algebra over either field.

pub mod cache;
pub mod error;
pub mod linalg;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{Field, GenericField, Mode, RootOfUnity, Scalar};
