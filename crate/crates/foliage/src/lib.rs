//! Exact computation of birational invariants of foliated algebraic surfaces.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod foliation;
pub mod gallery;
pub mod json;
pub mod lattice;
pub mod numeric;
pub mod plane;
pub mod zariski;

pub use error::{FoliageError, Result};
