//! Generalized variation of quasiconformal maps restricted to lines.
//!
//! The crate computes φ-variations of sampled paths, builds a planar
//! reduced-quasiconformal map whose real trace has unbounded variation, and
//! checks the matrix inequalities behind the four-dimensional theory.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod io;
pub mod matrix;
pub mod path;
pub mod phi;
pub mod planar;
pub mod quasisymmetry;
pub mod report;
pub mod svg;
pub mod tolerance;
pub mod variation;
pub mod verify;

pub use error::{Error, Result};
pub use path::SampledPath;
pub use phi::PhiSpec;
pub use quasisymmetry::QuasisymmetryModulus;
pub use variation::{sup_variation, VariationReport};
