//! Exact scalars, polynomials and linear algebra shared by every module.

pub mod bipoly;
pub mod dd;
pub mod linalg;
pub mod quadext;
pub mod ratfunc;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod upoly;

pub use bipoly::{poly_divides, BiPoly};
pub use dd::{Cx, Dd};
pub use linalg::{solve_linear_system, Solution};
pub use quadext::QuadExt;
pub use ratfunc::RatFunc;
pub use resultant::{resultant_eliminate, Variable};
pub use scalar::{int, rat, ExactField, Field, Rational, Ring};
pub use upoly::UPoly;
