use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::binform::{act, BinaryForm, LinearMap2};
use crate::classical::{f_t, g_t_cleared, q_t, ClosedForm};
use crate::error::AlgebraError;
use crate::ratpoly::{factorial, frac, rat};

fn ex(s: &str) -> Expr {
    Expr::parse(s).unwrap()
}

fn form(c: &[i64]) -> BinaryForm {
    BinaryForm::new(c.iter().map(|&x| rat(x)).collect()).unwrap()
}

#[test]
fn quartic_examples() {
    let v = equivalent_quartics(&q_t(rat(3)), &q_t(rat(-3))).unwrap();
    assert!(v.equivalent && v.mode == Mode::Exact);
    let v = equivalent_quartics(&q_t(rat(0)), &q_t(rat(1))).unwrap();
    assert!(!v.equivalent);
    assert_eq!(v.witness[0].left, Value::Exact(rat(1)));
    assert_eq!(v.witness[0].right, Value::Exact(frac(2197, 972)));
    assert!(matches!(
        equivalent_quartics(&q_t(rat(2)), &q_t(rat(1))),
        Err(AlgebraError::Domain(_))
    ));
    assert!(equivalent_quartics(&q_t(rat(1)), &f_t(5, rat(1)).unwrap()).is_err());
}

#[test]
fn quintic_examples() {
    let f1 = f_t(5, rat(1)).unwrap();
    let fm1 = f_t(5, rat(-1)).unwrap();
    assert!(!equivalent_quintics(&f1, &fm1).unwrap().equivalent);
    let t = frac(3, 2);
    let v = equivalent_quintics(&g_t_cleared(t.clone()), &g_t_cleared(t.recip())).unwrap();
    assert!(v.equivalent);
    assert_eq!(v.witness.len(), 3);
    // (z + w)^2 (z^3 + w^3)
    assert!(equivalent_quintics(&form(&[1, 2, 1, 1, 2, 1]), &f1).is_err());
}

#[test]
fn family_t_examples() {
    let v = germ_equiv_family_t(5, &ex("3/7"), &ex("3/7"), DEFAULT_DIGITS).unwrap();
    assert!(v.equivalent);
    assert!(
        germ_equiv_family_t(4, &ex("2"), &ex("-2"), DEFAULT_DIGITS)
            .unwrap()
            .equivalent
    );
    assert!(
        !germ_equiv_family_t(5, &ex("1"), &ex("2"), DEFAULT_DIGITS)
            .unwrap()
            .equivalent
    );
    assert!(
        !germ_equiv_family_t(5, &ex("1"), &ex("-1"), DEFAULT_DIGITS)
            .unwrap()
            .equivalent
    );
    assert!(germ_equiv_family_t(3, &ex("1"), &ex("1"), DEFAULT_DIGITS).is_err());
}

#[test]
fn family_t_inadmissible_parameter() {
    // 256 t^5 + 3125 = 0
    let err = germ_equiv_family_t(5, &ex("-(3125/256)^(1/5)"), &ex("1"), 30).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("256 t^5 + 3125 != 0"), "{msg}");
}

#[test]
fn family_t_roots_of_unity() {
    let v = germ_equiv_family_t(5, &ex("2"), &ex("2*(cos(2*pi/5) + i*sin(2*pi/5))"), 40).unwrap();
    assert!(v.equivalent && v.mode == Mode::Numeric);
    assert!(
        v.tolerance.unwrap() <= frac(2, 1) * BigRational::new(1.into(), BigInt::from(10).pow(40))
    );
    let v = germ_equiv_family_t(6, &ex("3/2"), &ex("3/2*(1 + i*sqrt(3))/2"), 40).unwrap();
    assert!(v.equivalent);
    let v = germ_equiv_family_t(4, &ex("1"), &ex("i"), 40).unwrap();
    assert!(v.equivalent);
    let v = germ_equiv_family_t(5, &ex("2"), &ex("2*(cos(2*pi/7) + i*sin(2*pi/7))"), 40).unwrap();
    assert!(!v.equivalent);
}

#[test]
fn family_st_showcase() {
    let v = germ_equiv_family_st(
        (&ex("5"), &ex("10")),
        (&ex("15*5^(-4/5)"), &ex("10*5^(-3/5)")),
        60,
    )
    .unwrap();
    assert!(v.equivalent && v.mode == Mode::Numeric);
    assert_eq!(v.precision, Some(60));
    let bound = BigRational::new(1.into(), BigInt::from(10).pow(40));
    assert!(v.max_gap().unwrap() < bound);
    assert!(v.tolerance.unwrap() < bound);
}

#[test]
fn family_st_exact_examples() {
    let v = germ_equiv_family_st((&ex("2/3"), &ex("-1")), (&ex("2/3"), &ex("-1")), 50).unwrap();
    assert!(v.equivalent && v.mode == Mode::Exact);
    let v = germ_equiv_family_st((&ex("0"), &ex("0")), (&ex("1"), &ex("1")), 50).unwrap();
    assert!(!v.equivalent);
    assert!(!v.witness[0].equal);
    let err = germ_equiv_family_st(
        (&ex("0"), &ex("-(3125/108)^(1/5)")),
        (&ex("1"), &ex("1")),
        30,
    );
    assert!(matches!(err, Err(AlgebraError::Domain(_))));
    // f_{1,-3} = (z - w)^2 (z^3 + 3 z^2 w + 2 z w^2 + w^3)
    let err = germ_equiv_family_st((&ex("1"), &ex("-3")), (&ex("1"), &ex("1")), 30);
    assert!(matches!(err, Err(AlgebraError::Domain(_))));
}

#[test]
fn numeric_eval_regressions() {
    let j = numeric_eval(ClosedForm::J, &ex("5"), &ex("10"), 60).unwrap();
    assert!(j.error_bound() < BigRational::new(1.into(), BigInt::from(10).pow(45)));
    assert!(j.contains(&BigRational::new(
        "82599311808921600000000000000".parse().unwrap(),
        1273.into()
    )));
    // irrational route to the same point
    let j2 = numeric_eval(ClosedForm::J, &ex("5*pi/pi"), &ex("10"), 60).unwrap();
    assert!(j2
        .to_decimal()
        .starts_with("64885555230888923802042419.48153967007069913589945011783189316575"));
    let c = BigRational::from_integer(BigInt::from(1_440_000) * factorial(10));
    let j00 = numeric_eval(ClosedForm::J, &ex("0*pi"), &ex("0"), 50).unwrap();
    assert!(j00.contains(&(rat(25) * &c * &c)));
    let l00 = numeric_eval(ClosedForm::L, &ex("pi - pi"), &ex("0"), 50).unwrap();
    assert!(l00.contains(&rat(0)));
    assert!(numeric_eval(ClosedForm::J, &ex("1"), &ex("1"), 10).is_err());
}

#[test]
fn exact_and_numeric_paths_agree_on_grid() {
    let digits = 30;
    for a in 0..10 {
        for b in 0..10 {
            let (s, t) = (frac(a - 4, 2), frac(b - 5, 3));
            // dividing by pi after multiplying forces genuine intervals
            let (se, te) = (ex(&format!("({s})*pi/pi")), ex(&format!("({t})*pi/pi")));
            for f in [ClosedForm::J, ClosedForm::K, ClosedForm::L] {
                let exact = f.eval(&s, &t).value().unwrap();
                let num = numeric_eval(f, &se, &te, digits).unwrap();
                assert!(num.contains(&exact), "{} at ({s}, {t})", f.name());
            }
        }
    }
}

fn small() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

fn invertible() -> impl Strategy<Value = LinearMap2> {
    (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2)
        .prop_map(|(a, b, c, d)| LinearMap2::from_ints(a, b, c, d))
        .prop_filter("invertible", |m| m.det() != rat(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quartic_orbits(c in prop::collection::vec(small(), 5), m in invertible()) {
        let q = BinaryForm::new(c).unwrap();
        prop_assume!(q != BinaryForm::zero(4) && crate::binform::is_square_free(&q).unwrap());
        let v = equivalent_quartics(&q, &act(&m, &q).unwrap()).unwrap();
        prop_assert!(v.equivalent);
    }

    #[test]
    fn two_routes_for_quintic_family(a in small(), b in small()) {
        let v = germ_equiv_family_t(5, &Expr::rational(a.clone()), &Expr::rational(b.clone()), 30).unwrap();
        let w = equivalent_quintics(&f_t(5, a).unwrap(), &f_t(5, b).unwrap()).unwrap();
        prop_assert_eq!(v.equivalent, w.equivalent);
    }

    #[test]
    fn st_verdicts_symmetric_and_reflexive(s1 in small(), t1 in small(), s2 in small(), t2 in small()) {
        prop_assume!(ClosedForm::DeltaFst.eval(&s1, &t1).numerator != rat(0));
        prop_assume!(ClosedForm::DeltaFst.eval(&s2, &t2).numerator != rat(0));
        let (a, b) = ((Expr::rational(s1), Expr::rational(t1)), (Expr::rational(s2), Expr::rational(t2)));
        let ab = germ_equiv_family_st((&a.0, &a.1), (&b.0, &b.1), 30).unwrap();
        let ba = germ_equiv_family_st((&b.0, &b.1), (&a.0, &a.1), 30).unwrap();
        prop_assert_eq!(ab.equivalent, ba.equivalent);
        prop_assert!(germ_equiv_family_st((&a.0, &a.1), (&a.0, &a.1), 30).unwrap().equivalent);
    }
}
