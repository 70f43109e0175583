//! Exact developability analysis and rational parametrization of algebraic
//! surfaces.
//!
//! Given a surface as an implicit polynomial `F(x, y, z) = 0` or as a
//! rational map `P(s, t)`, the crate decides whether its Gaussian curvature
//! vanishes identically, classifies a developable surface as a plane, cone,
//! cylinder or tangent surface of a space curve, and produces a ruled
//! parametrization `P0(t) + s * P1(t)` verified by exact substitution.

pub mod analysis;
pub mod builder;
pub mod curve;
pub mod implicit;
pub mod parametric;
pub mod parse;
pub mod poly;

pub use poly::{MultiPoly, Rat, RatFunc, RationalMap3, UniPoly};
