//! Absolute invariants of binary forms: `J` and `M` in any degree, the
//! quartic, quintic and sextic systems, and the parametric families with their
//! displayed closed forms.

mod families;
mod general;
mod quartic;
mod quintic;
mod sextic;
mod value;

pub use families::{
    big_f, bold_f_st, bold_f_t, bold_q_t, den, f_st, f_t, g_t_cleared, h_t_cleared, lin, p12, q_t,
    ClosedForm,
};
pub use general::{inv_j, inv_m, j_numerator_base};
pub use quartic::{quartic_invariants, QuarticInvariants};
pub use quintic::{
    canonizant, i18_rhs, i4_normalizer, quintic_invariants, verify_i18_square, I18Witness,
    QuinticInvariants,
};
pub use sextic::{
    i2_normalizer, sextic_basis, sextic_i2, sextic_invariants, sextic_invariants_from_basis,
    SexticBasis, SexticCalibration, SexticInvariants,
};
pub use value::InvariantValue;

use num_rational::BigRational;

use crate::binform::BinaryForm;
use crate::error::Result;

/// Every implemented absolute invariant applicable to `q`'s degree. Sextic
/// invariants are included when a calibration is supplied.
pub fn absolute_invariants(
    q: &BinaryForm<BigRational>,
    sextic: Option<&SexticCalibration>,
) -> Result<Vec<InvariantValue<BigRational>>> {
    let n = q.degree();
    let mut out = Vec::new();
    if n >= 3 {
        out.push(inv_j(q)?);
    }
    if n >= 4 && n % 2 == 0 {
        out.push(inv_m(q)?);
    }
    match n {
        4 => {
            let inv = quartic_invariants(q)?;
            out.push(inv.j);
            out.push(inv.k);
        }
        5 => {
            let inv = quintic_invariants(q)?;
            out.push(inv.k);
            out.push(inv.l);
        }
        6 => {
            if let Some(cal) = sextic {
                let inv = sextic_invariants(q, cal)?;
                out.extend([inv.j, inv.k, inv.l]);
            }
        }
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
