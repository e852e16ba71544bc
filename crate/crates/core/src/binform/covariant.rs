use num_rational::BigRational;

use super::form::BinaryForm;
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{binomial, Ring};

/// The `r`-th transvectant
/// `Σ_i (-1)^i C(r,i) ∂^r p/∂z^(r-i)∂w^i · ∂^r s/∂z^i∂w^(r-i)`, with no
/// factorial prefactor.
pub fn transvectant<R: Ring>(
    p: &BinaryForm<R>,
    s: &BinaryForm<R>,
    r: usize,
) -> Result<BinaryForm<R>> {
    if r > p.degree().min(s.degree()) {
        return Err(AlgebraError::domain(format!(
            "transvectant order {r} exceeds degrees {} and {}",
            p.degree(),
            s.degree()
        )));
    }
    let deg = p.degree() + s.degree() - 2 * r;
    let mut acc = BinaryForm::zero(deg);
    for i in 0..=r {
        let mut term = p.partial(r - i, i)?.mul(&s.partial(i, r - i)?);
        let mut c = BigRational::from_integer(binomial(r as u32, i as u32));
        if i % 2 == 1 {
            c = -c;
        }
        term = term.scale_rational(&c);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Scalar value of a transvectant whose result has degree 0.
pub fn transvectant_scalar<R: Ring>(p: &BinaryForm<R>, s: &BinaryForm<R>, r: usize) -> Result<R> {
    let t = transvectant(p, s, r)?;
    if t.degree() != 0 {
        return Err(AlgebraError::domain(format!(
            "transvectant of order {r} has degree {}, not 0",
            t.degree()
        )));
    }
    Ok(t.c(0).clone())
}

/// `H(Q) = Q_zz Q_ww - Q_zw^2`.
pub fn hessian<R: Ring>(q: &BinaryForm<R>) -> Result<BinaryForm<R>> {
    if q.degree() < 2 {
        return Err(AlgebraError::domain("Hessian of a form of degree < 2"));
    }
    let zz = q.partial(2, 0)?;
    let ww = q.partial(0, 2)?;
    let zw = q.partial(1, 1)?;
    zz.mul(&ww).sub(&zw.mul(&zw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::{act, LinearMap2};
    use crate::ratpoly::{factorial, frac, rat, MultiPoly};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn hessian_examples() {
        assert!(hessian(&form(&[0, 0, 0, 0, 1])).unwrap().is_zero());
        assert_eq!(hessian(&form(&[0, 1, 0])).unwrap(), form(&[-1]));
        assert_eq!(hessian(&form(&[1, 0, 0, 1])).unwrap(), form(&[0, 36, 0]));
        assert!(hessian(&form(&[1, 1])).is_err());
    }

    #[test]
    fn odd_diagonal_transvectant_vanishes() {
        let q = form(&[3, -1, 4, 1, -5, 9]);
        assert!(transvectant_scalar(&q, &q, 5).unwrap().is_zero());
        assert!(transvectant(&q, &q, 6).is_err());
    }

    #[test]
    fn diagonal_transvectant_matches_binomial_formula() {
        for n in 1..=6usize {
            let q = BinaryForm::new((0..=n).map(|i| MultiPoly::var(&format!("c{i}"))).collect())
                .unwrap();
            let lhs = transvectant_scalar(&q, &q, n).unwrap();
            let mut sum = MultiPoly::zero();
            for i in 0..=n {
                let term = q.a(i) * q.a(n - i);
                let b = BigRational::from_integer(binomial(n as u32, i as u32));
                let term = term.scale_by(&b);
                sum = if i % 2 == 0 { sum + term } else { sum - term };
            }
            let nf = BigRational::from_integer(factorial(n as u32));
            assert_eq!(lhs, sum.scale_by(&(&nf * &nf)), "n = {n}");
        }
    }

    fn small() -> impl Strategy<Value = BigRational> {
        (-5i64..=5, 1i64..=2).prop_map(|(p, q)| frac(p, q))
    }

    fn invertible() -> impl Strategy<Value = LinearMap2> {
        (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
            .prop_map(|(a, b, c, d)| LinearMap2::from_ints(a, b, c, d))
            .prop_filter("invertible", |m| !m.det().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn hessian_is_a_covariant(n in 2usize..=6, coeffs in prop::collection::vec(small(), 7), c in invertible()) {
            let q = BinaryForm::new(coeffs[..=n].to_vec()).unwrap();
            let lhs = hessian(&act(&c, &q).unwrap()).unwrap();
            let rhs = act(&c, &hessian(&q).unwrap()).unwrap();
            let d2 = c.det() * c.det();
            prop_assert_eq!(lhs.scale(&d2), rhs);
        }

        #[test]
        fn diagonal_transvectant_has_weight_n(n in 2usize..=6, coeffs in prop::collection::vec(small(), 7), c in invertible()) {
            let q = BinaryForm::new(coeffs[..=n].to_vec()).unwrap();
            let before = transvectant_scalar(&q, &q, n).unwrap();
            let after = transvectant_scalar(&act(&c, &q).unwrap(), &act(&c, &q).unwrap(), n).unwrap();
            prop_assert_eq!(before, Ring::pow(&c.det(), n as u32) * after);
        }
    }
}
