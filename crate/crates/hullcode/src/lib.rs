//! A workbench for exact coding theory over small finite fields: hull
//! dimensions of linear codes, the direct-sum and (u, u+v) propagation rules
//! with their hull predictions and SO/LCD/SD criteria, generalized
//! Reed-Solomon self-orthogonal constructions, Toeplitz formally self-dual
//! seeds, and bundled reproduction tables for all of the above.

pub mod code;
pub mod codefile;
pub mod constructions;
pub mod field;
pub mod grs;
pub mod matrix;
pub mod rng;
pub mod tables;
pub mod toeplitz;

pub use code::{classify, classify_with_design, CodeReport, DistanceInfo, Flavor, LinearCode};
pub use field::{Field, FieldElement, FieldError, FieldRef};
pub use matrix::{Matrix, ToeplitzSpec};
