//! Exact scalars: the field `Q(i)(m, mb)` of rational functions in the fiber
//! coordinate `m` and its conjugate `mb`, with Gaussian-rational coefficients.

mod gaussian;
mod polynomial;
mod rational;

pub use gaussian::GaussianRational;
pub use polynomial::{Exponent, Polynomial, Var};
pub use rational::RationalFunction;
