//! Exact polynomial and rational-function arithmetic over the rationals.
//!
//! Everything downstream (developability tests, eliminations, curve and
//! surface parametrizations) is built on the types in this module:
//!
//! * [`MultiPoly`]: sparse multivariate polynomial with [`Rat`] coefficients,
//! * [`RatFunc`]: reduced quotient of two `MultiPoly` values,
//! * [`RationalMap3`]: a triple of rational functions sharing one parameter list,
//! * [`UniPoly`]: dense univariate helper used for root finding and series work.

mod error;
mod gcd;
pub mod linalg;
mod map;
mod monomial;
mod multipoly;
mod rat;
mod ratfunc;
mod resultant;
mod subst;
pub mod univariate;
mod vars;

pub use error::PolyError;
pub use gcd::{content_in, gcd, gcd_many, lcm, primitive_part_in, squarefree_part};
pub use map::RationalMap3;
pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use rat::{int, is_perfect_square, primitive_int_vector, rat, rat_content, rat_sqrt, Rat};
pub use ratfunc::RatFunc;
pub use resultant::{det, det3, det4, det_cofactor, resultant, subresultant_linear};
pub use subst::{substitute, substitute_numerator, Bindings};
pub use univariate::UniPoly;
pub use vars::{fresh_var, merge_vars, sort_vars, var_rank, Vars};
