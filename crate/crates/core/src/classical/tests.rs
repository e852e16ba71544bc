use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::binform::{act, discriminant, LinearMap2};
use crate::ratpoly::{factorial, frac, rat, MultiPoly, Ring};

fn st() -> (MultiPoly, MultiPoly) {
    (MultiPoly::var("s"), MultiPoly::var("t"))
}

fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

#[test]
fn j_of_f_t_is_reciprocal_affine_in_t_power() {
    let t = MultiPoly::var("t");
    for n in 4..=7usize {
        let j = inv_j(&f_t(n, t.clone()).unwrap()).unwrap();
        let nf = big(factorial(n as u32));
        let n2f = big(factorial(2 * n as u32));
        let (base, e) = if n % 2 == 0 {
            (rat(2) * &nf * &nf, n - 1)
        } else {
            (rat(2) * &n2f * (&n2f - rat(2) * &nf * &nf), (n - 1) / 2)
        };
        let numerator = Ring::pow(&base, e as u32);
        assert_eq!(
            j.numerator.constant_value(),
            Some(numerator.clone()),
            "n = {n}"
        );
        // J = 1/(μ t^n + ν) with ν = 1/N, μ = (1-n)^(n-1)/(n^n N)
        let mu = big(BigInt::from(1 - n as i64).pow(n as u32 - 1))
            / big(BigInt::from(n).pow(n as u32))
            / &numerator;
        let nu = numerator.recip();
        let expected_den = Ring::pow(&t, n as u32).scale_by(&mu) + MultiPoly::constant(nu);
        let expected = InvariantValue::new("J", MultiPoly::one(), expected_den);
        assert_eq!(j.same_as(&expected), Some(true), "n = {n}");
    }
}

#[test]
fn quintic_pipeline_matches_closed_forms_symbolically() {
    let (s, t) = st();
    let inv = quintic_invariants(&f_st(s.clone(), t.clone())).unwrap();
    assert_eq!(Some(true), inv.j.same_as(&ClosedForm::J.eval(&s, &t)));
    assert_eq!(Some(true), inv.k.same_as(&ClosedForm::K.eval(&s, &t)));
    assert_eq!(Some(true), inv.l.same_as(&ClosedForm::L.eval(&s, &t)));
    let i12 = ClosedForm::I12.eval(&s, &t);
    assert_eq!(
        inv.i12.scale_by(&i12.denominator.constant_value().unwrap()),
        i12.numerator
    );
}

#[test]
fn k_and_l_vanish_on_f_t() {
    let t = MultiPoly::var("t");
    let inv = quintic_invariants(&f_t(5, t).unwrap()).unwrap();
    assert!(inv.i12.is_zero());
    assert!(inv.k.numerator.is_zero() && inv.l.numerator.is_zero());
    assert!(inv.j.numerator.total_degree() == Some(0));
    assert!(inv.j.denominator.degree_in("t") == 5);
}

#[test]
fn m_rejects_odd_degree() {
    let q = f_t(5, rat(1)).unwrap();
    assert!(inv_m(&q).is_err());
}

#[test]
fn absolute_invariants_ignore_overall_scale() {
    let g = g_t_cleared(frac(3, 2));
    let scaled = g.scale(&frac(-7, 5));
    let a = absolute_invariants(&g, None).unwrap();
    let b = absolute_invariants(&scaled, None).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.value(), y.value(), "{}", x.name);
    }
}

#[test]
fn discriminant_of_f_t_matches_closed_form() {
    let t = MultiPoly::var("t");
    for n in 4..=8 {
        let d = discriminant(&f_t(n, t.clone()).unwrap()).unwrap();
        let closed = ClosedForm::DeltaFt(n).eval(&MultiPoly::zero(), &t);
        assert_eq!(d, closed.value().unwrap());
    }
}

fn small() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=2).prop_map(|(p, q)| frac(p, q))
}

fn invertible() -> impl Strategy<Value = LinearMap2> {
    (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2)
        .prop_map(|(a, b, c, d)| LinearMap2::from_ints(a, b, c, d))
        .prop_filter("invertible", |m| !m.det().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn absolute_invariants_are_invariant(n in 3usize..=6, coeffs in prop::collection::vec(small(), 7), c in invertible()) {
        let q = BinaryForm::new(coeffs[..=n].to_vec()).unwrap();
        let before = absolute_invariants(&q, None).unwrap();
        let after = absolute_invariants(&act(&c, &q).unwrap(), None).unwrap();
        for (x, y) in before.iter().zip(&after) {
            if x.is_defined() && y.is_defined() {
                prop_assert_eq!(x.value(), y.value(), "{}", x.name);
            }
        }
    }
}
