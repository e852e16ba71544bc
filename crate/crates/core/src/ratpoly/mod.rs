//! Exact rational scalars and sparse multivariate polynomials.
//!
//! `BigRational` comes from `num-rational`; everything else here (the
//! polynomial type, exact division, Bareiss determinants, row reduction) is
//! local.

mod matrix;
mod multipoly;
mod quadratic;
mod ring;

pub use matrix::{det_cofactor, det_fraction_free, rank, rref, solve, LinearSolution};
pub use multipoly::{Monomial, MultiPoly};
pub use num_rational::BigRational;
pub use quadratic::QuadraticNumber;
pub use ring::{binomial, factorial, frac, rat, Ring};
