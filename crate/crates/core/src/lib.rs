//! Exact computations with finite-dimensional Hopf algebras, their comodules, relative Hopf
//! modules and the derived functors of coinvariants and Hom.

pub mod cohomology;
pub mod commands;
pub mod comodule;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod linalg;
pub mod modules;
pub mod relative;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod suite;
pub mod workspace;

pub use error::{Error, Result};
pub use linalg::{Matrix, SparseMatrix, Subspace};
pub use scalar::{FieldSpec, Scalar};
