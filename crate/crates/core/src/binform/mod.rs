//! Binary forms `Σ c_i z^i w^(n-i)`, the `GL(2)` action, and the covariant
//! primitives built on them.

mod covariant;
mod form;
mod resultant;

pub use covariant::{hessian, transvectant, transvectant_scalar};
pub use form::{act, BinaryForm, LinearMap2};
pub use resultant::{
    discriminant, discriminant_from_roots, discriminant_universal, generic_coefficient_names,
    is_square_free, is_square_free_gcd, rational_sqrt, resultant, universal_discriminant,
    UNIVERSAL_MAX_DEGREE,
};
