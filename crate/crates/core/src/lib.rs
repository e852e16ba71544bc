//! Exact invariant theory of binary forms and the Milnor algebras of
//! homogeneous plane-curve singularities.
//!
//! The crate is layered bottom-up:
//!
//! * [`ratpoly`]: rationals, sparse multivariate polynomials, exact linear algebra.
//! * [`binform`]: binary forms, the `GL(2)` action, transvectants, Hessians,
//!   resultants and discriminants.
//! * [`classical`]: absolute invariants of quartics, quintics and sextics and
//!   the closed-form family evaluators.
//! * [`milnor`]: graded Milnor algebras, the `S_π` polynomial and associated forms.
//! * [`equiv`]: equivalence decisions, exact and interval-numeric.
//! * [`conjecture`]: calibration of sextic invariants and the evidence checks
//!   relating a form to its associated form.

pub mod binform;
pub mod classical;
pub mod conjecture;
pub mod equiv;
pub mod error;
pub mod milnor;
pub mod ratpoly;

pub use error::{AlgebraError, Result};
