use super::value::InvariantValue;
use crate::binform::{discriminant, hessian, transvectant_scalar, BinaryForm};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::Ring;

/// The degree-2 (even `n`) or degree-4 (odd `n`) transvectant invariant used
/// as the numerator base of `J`: `(Q,Q)^(n)` or `(Q²,Q²)^(2n)`.
pub fn j_numerator_base<R: Ring>(q: &BinaryForm<R>) -> Result<R> {
    let n = q.degree();
    if n % 2 == 0 {
        transvectant_scalar(q, q, n)
    } else {
        let q2 = q.mul(q);
        transvectant_scalar(&q2, &q2, 2 * n)
    }
}

/// `J(Q) = [(Q,Q)^(n)]^(n-1) / Δ` for even `n`,
/// `[(Q²,Q²)^(2n)]^((n-1)/2) / Δ` for odd `n`.
pub fn inv_j<R: Ring>(q: &BinaryForm<R>) -> Result<InvariantValue<R>> {
    let n = q.degree();
    if n < 3 {
        return Err(AlgebraError::domain(format!(
            "J needs degree >= 3, got {n}"
        )));
    }
    let base = j_numerator_base(q)?;
    let e = if n % 2 == 0 { n - 1 } else { (n - 1) / 2 };
    Ok(InvariantValue::new(
        "J",
        Ring::pow(&base, e as u32),
        discriminant(q)?,
    ))
}

/// `M(Q) = (H, H)^(2(n-2)) / [(Q,Q)^(n)]^2` for even `n`.
pub fn inv_m<R: Ring>(q: &BinaryForm<R>) -> Result<InvariantValue<R>> {
    let n = q.degree();
    if n % 2 == 1 || n < 4 {
        return Err(AlgebraError::domain(format!(
            "M needs even degree >= 4, got {n}"
        )));
    }
    let h = hessian(q)?;
    let num = transvectant_scalar(&h, &h, 2 * (n - 2))?;
    let base = transvectant_scalar(q, q, n)?;
    Ok(InvariantValue::new("M", num, base.clone() * &base))
}
