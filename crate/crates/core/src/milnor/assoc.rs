use num_rational::BigRational;
use num_traits::Zero;

use super::algebra::MilnorAlgebra;
use crate::binform::BinaryForm;
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{binomial, factorial, MultiPoly};

/// Variable names `zeta1..zetam` of the coordinates on the kernel of `π`.
pub fn zeta_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("zeta{i}")).collect()
}

/// `P_π(ζ) = -top(exp(Σ ζ_i e_i))`, where `e_1 .. e_m` run over the quotient
/// basis in degrees `1..ν-1` (so `e_1, e_2` are the classes of `z, w`) and
/// `π` projects onto the top piece along everything below it.
///
/// The number of coordinates is `m = dim - 2`: the maximal ideal has
/// dimension `dim - 1` and the top piece is one-dimensional.
pub fn s_pi_polynomial(alg: &MilnorAlgebra) -> MultiPoly {
    let nu = alg.nu();
    let lo = alg.offset(1);
    let hi = alg.offset(nu);
    let names = zeta_names(hi - lo);
    let mut u = vec![MultiPoly::zero(); alg.dimension()];
    for (k, slot) in u.iter_mut().enumerate().take(hi).skip(lo) {
        *slot = MultiPoly::var(&names[k - lo]);
    }
    // exp(u) - 1 = Σ_{k=1..ν} u^k / k!; u is nilpotent of index ν.
    let mut power = u.clone();
    let mut top = alg.top(&power).clone();
    for k in 2..=nu {
        power = alg.multiply(&power, &u);
        let inv = BigRational::new(1.into(), factorial(k as u32));
        top = top + alg.top(&power).scale_by(&inv);
    }
    -top
}

/// A binary form of degree `2(n-2)` in `ζ1, ζ2`, meaningful up to a nonzero
/// scalar.
#[derive(Clone, Debug)]
pub struct AssociatedForm {
    pub form: BinaryForm,
}

impl AssociatedForm {
    /// Proportionality, the only meaningful equality.
    pub fn same_class(&self, other: &BinaryForm) -> bool {
        matches!(proportional(&self.form, other), Ok(Some(_)))
    }
}

/// `Σ C(ν,i) λ_i ζ1^i ζ2^(ν-i)` with `λ_i` the top coordinate of the class of
/// `z^i w^(ν-i)`; this is `-ν!` times the top homogeneous part of `P_π`.
pub fn associated_form_of(alg: &MilnorAlgebra) -> AssociatedForm {
    let nu = alg.nu() as u32;
    let coeffs = (0..=nu)
        .map(|i| {
            let class = alg.monomial_class((i, nu - i));
            alg.top(&class).clone() * BigRational::from_integer(binomial(nu, i))
        })
        .collect();
    AssociatedForm {
        form: BinaryForm::new(coeffs).expect("nonempty"),
    }
}

pub fn associated_form(q: &BinaryForm) -> Result<AssociatedForm> {
    Ok(associated_form_of(&MilnorAlgebra::build(q)?))
}

/// The `c` with `p = c·s`, or `None` when the forms are not proportional.
pub fn proportional(p: &BinaryForm, s: &BinaryForm) -> Result<Option<BigRational>> {
    if p.degree() != s.degree() {
        return Err(AlgebraError::domain("proportional: degree mismatch"));
    }
    if p.is_zero() && s.is_zero() {
        return Err(AlgebraError::domain("proportional: both forms are zero"));
    }
    if p.is_zero() || s.is_zero() {
        return Ok(None);
    }
    let k = (0..=s.degree())
        .find(|&i| !s.c(i).is_zero())
        .expect("nonzero");
    let c = p.c(k) / s.c(k);
    Ok((p == &s.scale(&c)).then_some(c))
}

/// The top homogeneous component of `P_π` read as a binary form in
/// `zeta1, zeta2`.
pub fn top_component_form(p: &MultiPoly, nu: usize) -> BinaryForm {
    let coeffs = (0..=nu as u32)
        .map(|i| p.coefficient(&[("zeta1", i), ("zeta2", nu as u32 - i)]))
        .collect();
    BinaryForm::new(coeffs).expect("nonempty")
}

/// Whether the monomials of `p` of degree `nu` involve only `zeta1, zeta2`.
pub fn top_component_is_binary(p: &MultiPoly, nu: usize) -> bool {
    let vars = p.vars();
    p.terms().all(|(m, _)| {
        m.degree() != nu as u32
            || m.0
                .iter()
                .enumerate()
                .all(|(k, &e)| e == 0 || vars[k] == "zeta1" || vars[k] == "zeta2")
    })
}

/// Smallest total degree among the terms of `p`.
pub fn lowest_degree(p: &MultiPoly) -> Option<u32> {
    p.terms().map(|(m, _)| m.degree()).min()
}

/// Whether a coordinate vector is zero.
pub fn is_zero_class(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}
