use super::value::InvariantValue;
use crate::binform::BinaryForm;
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{rat, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticInvariants<R: Ring> {
    pub i2: R,
    pub i3: R,
    /// `I2^3 - 27 I3^2`
    pub discriminant: R,
    /// `I2^3 / Δ`
    pub j: InvariantValue<R>,
    /// `I2^3 / (27 I3^2)`
    pub k: InvariantValue<R>,
}

/// `I2 = a0 a4 - 4 a1 a3 + 3 a2^2` and `I3` the catalecticant determinant,
/// for a general quartic.
pub fn quartic_invariants<R: Ring>(q: &BinaryForm<R>) -> Result<QuarticInvariants<R>> {
    if q.degree() != 4 {
        return Err(AlgebraError::domain(format!(
            "quartic invariants of a degree-{} form",
            q.degree()
        )));
    }
    let a: Vec<R> = (0..=4).map(|i| q.a(i)).collect();
    let i2 = a[0].clone() * &a[4] - (a[1].clone() * &a[3]).scale(&rat(4))
        + (a[2].clone() * &a[2]).scale(&rat(3));
    let i3 = a[0].clone() * &a[2] * &a[4] + (a[1].clone() * &a[2] * &a[3]).scale(&rat(2))
        - a[2].clone() * &a[2] * &a[2]
        - a[0].clone() * &a[3] * &a[3]
        - a[1].clone() * &a[1] * &a[4];
    let i2_cubed = Ring::pow(&i2, 3);
    let i3_sq = i3.clone() * &i3;
    let discriminant = i2_cubed.clone() - i3_sq.scale(&rat(27));
    Ok(QuarticInvariants {
        j: InvariantValue::new("sf_J", i2_cubed.clone(), discriminant.clone()),
        k: InvariantValue::new("sf_K", i2_cubed, i3_sq.scale(&rat(27))),
        i2,
        i3,
        discriminant,
    })
}
