//! Graded Milnor algebras of square-free binary forms, the `S_π`
//! polynomial, and associated forms.

mod algebra;
mod assoc;

pub use algebra::{hilbert_by_rank, monomials, projection_kernel_rank, MilnorAlgebra, Mono};
pub use assoc::{
    associated_form, associated_form_of, is_zero_class, lowest_degree, proportional,
    s_pi_polynomial, top_component_form, top_component_is_binary, zeta_names, AssociatedForm,
};
