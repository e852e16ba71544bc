use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::general::j_numerator_base;
use super::value::InvariantValue;
use crate::binform::{discriminant, rational_sqrt, BinaryForm};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{factorial, rat, Ring};

fn check_quintic<R: Ring>(q: &BinaryForm<R>) -> Result<()> {
    if q.degree() != 5 {
        return Err(AlgebraError::domain(format!(
            "expected a quintic, got degree {}",
            q.degree()
        )));
    }
    Ok(())
}

/// The canonizant: the cubic `det [a_(5-r-c) z + a_(4-r-c) w]_(r,c=0..2)`.
pub fn canonizant<R: Ring>(q: &BinaryForm<R>) -> Result<BinaryForm<R>> {
    check_quintic(q)?;
    let a: Vec<R> = (0..=5).map(|i| q.a(i)).collect();
    let entry = |r: usize, c: usize| {
        BinaryForm::new(vec![a[4 - r - c].clone(), a[5 - r - c].clone()]).expect("linear form")
    };
    let m: Vec<Vec<BinaryForm<R>>> = (0..3)
        .map(|r| (0..3).map(|c| entry(r, c)).collect())
        .collect();
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
    };
    let t0 = m[0][0].mul(&minor(1, 2, 1, 2)?);
    let t1 = m[0][1].mul(&minor(1, 2, 0, 2)?);
    let t2 = m[0][2].mul(&minor(1, 2, 0, 1)?);
    t0.sub(&t1)?.add(&t2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuinticInvariants<R: Ring> {
    /// `(Q², Q²)^(10)`
    pub n10: R,
    pub i4: R,
    pub i8: R,
    pub i12: R,
    pub discriminant: R,
    pub j: InvariantValue<R>,
    pub k: InvariantValue<R>,
    pub l: InvariantValue<R>,
}

/// `7200000 · 10!`
pub fn i4_normalizer() -> BigRational {
    BigRational::from_integer(BigInt::from(7_200_000) * factorial(10))
}

pub fn quintic_invariants<R: Ring>(q: &BinaryForm<R>) -> Result<QuinticInvariants<R>> {
    check_quintic(q)?;
    let n10 = j_numerator_base(q)?;
    let disc = discriminant(q)?;
    let i12 = discriminant(&canonizant(q)?)?.scale(&rat(-27));
    let i4 = n10.scale(&i4_normalizer().recip());
    let i8 = (i4.clone() * &i4 - &disc).scale(&BigRational::new(1.into(), 128.into()));
    let d2 = disc.clone() * &disc;
    Ok(QuinticInvariants {
        j: InvariantValue::new("J", Ring::pow(&n10, 2), disc.clone()),
        k: InvariantValue::new("K", i12.clone() * &i12, d2.clone() * &disc),
        l: InvariantValue::new("L", n10.clone() * &i12, d2),
        n10,
        i4,
        i8,
        i12,
        discriminant: disc,
    })
}

/// Right-hand side `R` of `16 I18² = R` and, when it exists, the
/// non-negative rational `r` with `R = 16 r²`.
#[derive(Clone, Debug, PartialEq)]
pub struct I18Witness {
    pub rhs: BigRational,
    pub root: Option<BigRational>,
}

impl I18Witness {
    pub fn holds(&self) -> bool {
        self.root.is_some()
    }
}

pub fn i18_rhs<R: Ring>(inv: &QuinticInvariants<R>) -> R {
    let (i4, i8, i12) = (&inv.i4, &inv.i8, &inv.i12);
    let p = |x: &R, e: u32| Ring::pow(x, e);
    i4.clone() * p(i8, 4) + (p(i8, 3) * i12).scale(&rat(8))
        - (p(i4, 2) * p(i8, 2) * i12).scale(&rat(2))
        - (i4.clone() * i8 * p(i12, 2)).scale(&rat(72))
        - p(i12, 3).scale(&rat(432))
        + p(i4, 3) * p(i12, 2)
}

pub fn verify_i18_square(q: &BinaryForm<BigRational>) -> Result<I18Witness> {
    let inv = quintic_invariants(q)?;
    let rhs = i18_rhs(&inv);
    let root = if rhs.is_zero() {
        Some(BigRational::zero())
    } else {
        rational_sqrt(&(&rhs / rat(16)))
    };
    Ok(I18Witness { rhs, root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::{act, LinearMap2};
    use crate::classical::families::{f_st, ClosedForm};
    use crate::ratpoly::{det_fraction_free, frac, MultiPoly};

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn canonizant_of_z5_plus_w5_vanishes() {
        assert!(canonizant(&form(&[1, 0, 0, 0, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn canonizant_matches_bareiss_on_generic_quintic() {
        let names: Vec<String> = (0..=5).map(|i| format!("c{i}")).collect();
        let q = BinaryForm::new(names.iter().map(|v| MultiPoly::var(v)).collect()).unwrap();
        let can = canonizant(&q).unwrap();
        let a: Vec<MultiPoly> = (0..=5).map(|i| q.a(i)).collect();
        let (z, w) = (MultiPoly::var("z"), MultiPoly::var("w"));
        let m: Vec<Vec<MultiPoly>> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| &a[5 - r - c] * &z + &a[4 - r - c] * &w)
                    .collect()
            })
            .collect();
        assert_eq!(det_fraction_free(&m).unwrap(), can.to_poly("z", "w"));
    }

    #[test]
    fn origin_values() {
        let inv = quintic_invariants(&f_st(rat(0), rat(0))).unwrap();
        assert_eq!(inv.i4, rat(1));
        assert_eq!(inv.i8, rat(0));
        assert_eq!(inv.i12, rat(0));
        let w = verify_i18_square(&f_st(rat(0), rat(0))).unwrap();
        assert_eq!(w.rhs, rat(0));
        assert_eq!(w.root, Some(rat(0)));
    }

    #[test]
    fn i12_at_zero_one() {
        let inv = quintic_invariants(&f_st(rat(0), rat(1))).unwrap();
        assert_eq!(inv.i12, frac(399973, 10_000_000_000));
        let closed = ClosedForm::I12.eval(&rat(0), &rat(1)).value().unwrap();
        assert_eq!(inv.i12, closed);
    }

    #[test]
    fn i18_regression_at_one_one() {
        let w = verify_i18_square(&f_st(rat(1), rat(1))).unwrap();
        assert!(w.holds());
        let r = w.root.unwrap();
        assert_eq!(&r * &r * rat(16), w.rhs);
        assert_eq!(
            r,
            BigRational::new(1_100_358_071.into(), 1_000_000_000_000_000i64.into())
        );
    }

    #[test]
    fn canonizant_is_a_covariant() {
        let q = form(&[2, -1, 3, 0, 1, 4]);
        let c = LinearMap2::from_ints(1, 2, -1, 3);
        let lhs = canonizant(&act(&c, &q).unwrap()).unwrap();
        let rhs = act(&c, &canonizant(&q).unwrap()).unwrap();
        let ratio = (0..=3)
            .find_map(|i| (!rhs.c(i).is_zero()).then(|| lhs.c(i) / rhs.c(i)))
            .unwrap();
        assert_eq!(lhs, rhs.scale(&ratio));
    }
}
