//! Newton polygons of rational plane curves.
//!
//! The polygon of the implicit equation of `t ↦ (f(t), g(t))` is computed
//! from the zero/pole multiplicities of `f` and `g` alone, and every result
//! can be cross-checked against a Sylvester-resultant implicitization.

pub mod error;
pub mod exact_poly;
pub mod expr;
pub mod implicitize;
pub mod lattice;
pub mod newton_pipeline;
pub mod ratfunc;
pub mod registry;
pub mod svg;
pub mod synth;

pub use error::{Error, Result};
