use num_bigint::BigInt;
use num_rational::BigRational;

use super::value::InvariantValue;
use crate::binform::{transvectant, transvectant_scalar, BinaryForm};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{factorial, frac, rat, Ring};

/// Transvectant invariants of a sextic `f`, built from `i = (f,f)^(4)`,
/// `Δ = (i,i)^(2)`, `y1 = (f,i)^(4)`, `y2 = (i,y1)^(2)`, `y3 = (i,y2)^(2)`:
///
/// * `a = (f,f)^(6) / (6!)^2` (degree 2),
/// * `b = (i,i)^(4)` (degree 4),
/// * `c = (i,Δ)^(4)` (degree 6),
/// * `d = (y3,y1)^(2)` (degree 10).
#[derive(Clone, Debug, PartialEq)]
pub struct SexticBasis<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> SexticBasis<R> {
    /// The degree-10 products `[a^5, a^3 b, a b^2, a^2 c, b c, d]`.
    pub fn degree10(&self) -> [R; 6] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [
            Ring::pow(a, 5),
            Ring::pow(a, 3) * b,
            a.clone() * b * b,
            a.clone() * a * c,
            b.clone() * c,
            self.d.clone(),
        ]
    }
}

pub fn sextic_basis<R: Ring>(f: &BinaryForm<R>) -> Result<SexticBasis<R>> {
    if f.degree() != 6 {
        return Err(AlgebraError::domain(format!(
            "expected a sextic, got degree {}",
            f.degree()
        )));
    }
    let i = transvectant(f, f, 4)?;
    let delta = transvectant(&i, &i, 2)?;
    let y1 = transvectant(f, &i, 4)?;
    let y2 = transvectant(&i, &y1, 2)?;
    let y3 = transvectant(&i, &y2, 2)?;
    let f6 = BigRational::from_integer(factorial(6));
    Ok(SexticBasis {
        a: transvectant_scalar(f, f, 6)?.scale(&(&f6 * &f6).recip()),
        b: transvectant_scalar(&i, &i, 4)?,
        c: transvectant_scalar(&i, &delta, 4)?,
        d: transvectant_scalar(&y3, &y1, 2)?,
    })
}

/// Constants fixing the degree-4 and degree-10 sextic invariants:
/// `I4* = alpha·I2² + beta·b` and `I10* = Σ gamma_k · degree10()[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SexticCalibration {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: [BigRational; 6],
}

#[derive(Clone, Debug, PartialEq)]
pub struct SexticInvariants<R: Ring> {
    pub i2: R,
    pub i4: R,
    pub i10: R,
    /// `I2² - 2 I4`
    pub e: R,
    pub j: InvariantValue<R>,
    pub k: InvariantValue<R>,
    pub l: InvariantValue<R>,
}

pub fn sextic_invariants<R: Ring>(
    f: &BinaryForm<R>,
    cal: &SexticCalibration,
) -> Result<SexticInvariants<R>> {
    let basis = sextic_basis(f)?;
    Ok(sextic_invariants_from_basis(&basis, cal))
}

pub fn sextic_invariants_from_basis<R: Ring>(
    basis: &SexticBasis<R>,
    cal: &SexticCalibration,
) -> SexticInvariants<R> {
    let i2 = basis.a.clone();
    let i2sq = i2.clone() * &i2;
    let i4 = i2sq.scale(&cal.alpha) + basis.b.scale(&cal.beta);
    let i10 = basis
        .degree10()
        .iter()
        .zip(&cal.gamma)
        .fold(R::zero(), |acc, (m, g)| acc + m.scale(g));
    let e = i2sq.clone() - i4.scale(&rat(2));
    let e3 = Ring::pow(&e, 3);
    SexticInvariants {
        j: InvariantValue::new("bold_J", i2sq.scale(&frac(3, 5)), e.clone()),
        k: InvariantValue::new(
            "bold_K",
            (i10.clone() * &i10).scale(&rat(759_375)),
            e3.clone() * &e * &e,
        ),
        l: InvariantValue::new("bold_L", (i2.clone() * &i10).scale(&rat(675)), e3),
        i2,
        i4,
        i10,
        e,
    }
}

/// `I2 = (f,f)^(6) / (6!)^2` alone, which needs no calibration.
pub fn sextic_i2<R: Ring>(f: &BinaryForm<R>) -> Result<R> {
    let f6 = BigRational::from_integer(factorial(6) * factorial(6));
    Ok(transvectant_scalar(f, f, 6)?.scale(&f6.recip()))
}

/// `6!^2`, exposed for callers reproducing the normalization of `I2`.
pub fn i2_normalizer() -> BigInt {
    factorial(6) * factorial(6)
}
