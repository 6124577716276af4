//! Frobenius objects in the category of finite sets and relations.
//!
//! Relations are packed bit matrices composed in diagrammatic order. On top
//! of them sit Frobenius data and its axioms, constructions from groups and
//! groupoids, partition functions of the associated two-dimensional TQFT,
//! a small string-diagram language, and an exhaustive classifier.

pub mod classify;
pub mod constructors;
pub mod diagram;
pub mod error;
pub mod frobenius;
pub mod relation;
pub mod tqft;

pub use classify::{classify, Census, ClassifyOptions};
pub use error::{Error, Result};
pub use frobenius::{verify, FrobData, FrobObject};
pub use relation::{ElemSet, FinSet, Relation};
pub use tqft::{partition_function, PartitionFunction};
