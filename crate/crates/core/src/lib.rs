#![no_std]

extern crate alloc;

pub mod algebra;
pub mod algebroid;
pub mod catalog;
pub mod derivations;
pub mod error;
pub mod leibniz;
pub mod lie_rinehart;
pub mod lm;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod tensor;

pub use algebra::{AModule, CommAlgebra};
pub use error::{Error, Result};
pub use leibniz::{LeibnizAlgebra, LieAlgebra, LieModule, RightLieModule};
pub use matrix::{Matrix, Vector};
pub use report::{Axiom, CheckReport, Violation};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use tensor::StructureTensor;
