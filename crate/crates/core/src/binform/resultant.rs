use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::form::BinaryForm;
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{det_fraction_free, MultiPoly, Ring};

/// Sylvester resultant of two forms, with the rows of `p` first and
/// coefficients listed by descending power of `z` (formal degrees).
pub fn resultant<R: Ring>(p: &BinaryForm<R>, s: &BinaryForm<R>) -> Result<R> {
    if p.is_zero() || s.is_zero() {
        return Err(AlgebraError::domain("resultant of a zero form"));
    }
    let (m, k) = (p.degree(), s.degree());
    let size = m + k;
    if size == 0 {
        return Ok(R::one());
    }
    let desc = |f: &BinaryForm<R>| f.coeffs().iter().rev().cloned().collect::<Vec<_>>();
    let (pd, sd) = (desc(p), desc(s));
    let mut rows = Vec::with_capacity(size);
    for shift in 0..k {
        let mut row = vec![R::zero(); size];
        row[shift..shift + m + 1].clone_from_slice(&pd);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![R::zero(); size];
        row[shift..shift + k + 1].clone_from_slice(&sd);
        rows.push(row);
    }
    det_fraction_free(&rows)
}

/// `Δ(Q) = R(Q, ∂Q/∂z) / (n^n a_n)`, made total on forms with `a_n = 0` by
/// first applying a shear `w ↦ w + kz` (determinant 1, so `Δ` is unchanged)
/// that moves the root at `(1, 0)` away. Degree 1 gives 1 by convention.
pub fn discriminant<R: Ring>(q: &BinaryForm<R>) -> Result<R> {
    let n = q.degree();
    match n {
        0 => return Err(AlgebraError::domain("discriminant of a degree-0 form")),
        1 => return Ok(R::one()),
        _ => {}
    }
    let shifted;
    let q = if q.c(n).is_zero() {
        let Some(k) = (1..=n as i64).find(|&k| !q.eval(&R::one(), &R::from_int(k)).is_zero())
        else {
            // Q(1, k) = 0 for n + 1 values of k: Q is the zero form.
            return Ok(R::zero());
        };
        shifted = q.substitute(&R::one(), &R::zero(), &R::from_int(k), &R::one());
        &shifted
    } else {
        q
    };
    let r = resultant(q, &q.dz()?)?;
    let nn = BigRational::from_integer(BigInt::from(n).pow(n as u32));
    r.exact_div(&q.c(n).scale(&nn))
}

/// `Δ` from the product-over-roots definition
/// `(-1)^(n(n-1)/2) / n^n · Π_{α<β} (z_α w_β - z_β w_α)^2`.
pub fn discriminant_from_roots<R: Ring>(pairs: &[(R, R)]) -> Result<R> {
    let n = pairs.len();
    if n == 0 {
        return Err(AlgebraError::domain("no roots"));
    }
    let mut prod = R::one();
    for a in 0..n {
        for b in a + 1..n {
            let d = pairs[a].0.clone() * &pairs[b].1 - pairs[b].0.clone() * &pairs[a].1;
            prod = prod * &d * &d;
        }
    }
    let mut scale = BigRational::new(BigInt::one(), BigInt::from(n).pow(n as u32));
    if (n * (n - 1) / 2) % 2 == 1 {
        scale = -scale;
    }
    Ok(prod.scale(&scale))
}

/// Largest degree with a cached universal discriminant.
pub const UNIVERSAL_MAX_DEGREE: usize = 6;

static UNIVERSAL: [OnceLock<MultiPoly>; UNIVERSAL_MAX_DEGREE + 1] =
    [const { OnceLock::new() }; UNIVERSAL_MAX_DEGREE + 1];

/// Variable names `c0..cn` of the generic degree-`n` form.
pub fn generic_coefficient_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("c{i}")).collect()
}

/// The discriminant of the generic form `Σ c_i z^i w^(n-i)` as a polynomial in
/// `c0..cn`, obtained as `R(Q, Q_z)` divided exactly by `n^n c_n`. Computed
/// once per degree.
pub fn universal_discriminant(n: usize) -> Result<&'static MultiPoly> {
    if !(1..=UNIVERSAL_MAX_DEGREE).contains(&n) {
        return Err(AlgebraError::domain(format!(
            "universal discriminant is cached for degrees 1..={UNIVERSAL_MAX_DEGREE}"
        )));
    }
    if let Some(u) = UNIVERSAL[n].get() {
        return Ok(u);
    }
    let names = generic_coefficient_names(n);
    let q = BinaryForm::new(names.iter().map(|v| MultiPoly::var(v)).collect())?;
    let u = if n == 1 {
        MultiPoly::one()
    } else {
        let r = resultant(&q, &q.dz()?)?;
        let nn = BigRational::from_integer(BigInt::from(n).pow(n as u32));
        r.exact_divide(&q.c(n).scale_by(&nn))?
    };
    Ok(UNIVERSAL[n].get_or_init(|| u))
}

/// Evaluates the cached universal discriminant at `q`'s coefficients.
pub fn discriminant_universal<R: Ring>(q: &BinaryForm<R>) -> Result<R> {
    let u = universal_discriminant(q.degree())?;
    let names = generic_coefficient_names(q.degree());
    let mut values = Vec::with_capacity(u.vars().len());
    for v in u.vars() {
        let i = names
            .iter()
            .position(|x| x == v)
            .expect("generic coefficient name");
        values.push(q.c(i).clone());
    }
    Ok(u.eval_ring(&values))
}

/// `Δ(q) ≠ 0`.
pub fn is_square_free<R: Ring>(q: &BinaryForm<R>) -> Result<bool> {
    if q.is_zero() {
        return Err(AlgebraError::domain("square-freeness of the zero form"));
    }
    if q.degree() == 0 {
        return Ok(true);
    }
    Ok(!discriminant(q)?.is_zero())
}

/// Square-freeness by a gcd test, independent of the discriminant: `Q` is
/// square-free iff the multiplicity of the root `(1, 0)` (the power of `w`
/// dividing `Q`) is at most one and `gcd(f, f') = 1` for `f(x) = Q(x, 1)`.
pub fn is_square_free_gcd(q: &BinaryForm<BigRational>) -> Result<bool> {
    if q.is_zero() {
        return Err(AlgebraError::domain("square-freeness of the zero form"));
    }
    let f = trim(q.coeffs().to_vec());
    let w_mult = q.degree() + 1 - f.len();
    if w_mult >= 2 {
        return Ok(false);
    }
    let df: Vec<BigRational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    Ok(univariate_gcd(f, trim(df)).len() <= 1)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Monic gcd of dense univariate polynomials (low-to-high coefficients).
fn univariate_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    while !b.is_empty() {
        let r = univariate_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lc;
        }
    }
    a
}

fn univariate_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Whether a rational is the square of a rational; returns the non-negative root.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::{act, LinearMap2};
    use crate::ratpoly::{frac, rat};
    use proptest::prelude::*;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&form(&[0, 1]), &form(&[1, 0])).unwrap(), rat(1));
        // product over the root of 2z: lc(s)^deg p · p(0, 1) = 4 · (-1)
        assert_eq!(
            resultant(&form(&[-1, 0, 1]), &form(&[0, 2])).unwrap(),
            rat(-4)
        );
        assert!(resultant(&form(&[0, 0]), &form(&[1, 0])).is_err());
    }

    #[test]
    fn quadratic_discriminant_both_routes() {
        let q = form(&[-1, 0, 1]);
        assert_eq!(discriminant(&q).unwrap(), rat(-1));
        let roots = [(rat(1), rat(1)), (rat(-1), rat(1))];
        assert_eq!(discriminant_from_roots(&roots).unwrap(), rat(-1));
    }

    #[test]
    fn degenerate_degrees() {
        assert_eq!(discriminant(&form(&[3, 2])).unwrap(), rat(1));
        assert!(discriminant(&form(&[3])).is_err());
        assert_eq!(discriminant(&form(&[0, 0, 0, 0, 0, 1])).unwrap(), rat(0));
        assert_eq!(discriminant(&form(&[0, 0, 0])).unwrap(), rat(0));
    }

    #[test]
    fn leading_coefficient_zero_uses_shear() {
        // z w (z - w): a_3 = 0 but square-free
        let q = BinaryForm::from_roots(&[(rat(0), rat(1)), (rat(1), rat(0)), (rat(1), rat(1))])
            .unwrap();
        assert_eq!(q.c(3), &rat(0));
        let roots = [(rat(0), rat(1)), (rat(1), rat(0)), (rat(1), rat(1))];
        assert_eq!(
            discriminant(&q).unwrap(),
            discriminant_from_roots(&roots).unwrap()
        );
        assert!(!discriminant(&q).unwrap().is_zero());
    }

    #[test]
    fn ft_resultant_identity_degree_five() {
        let t = MultiPoly::var("t");
        let one = MultiPoly::one();
        let mut c = vec![MultiPoly::zero(); 6];
        c[0] = one.clone();
        c[4] = t.clone();
        c[5] = one;
        let f = BinaryForm::new(c).unwrap();
        let r = resultant(&f, &f.dz().unwrap()).unwrap();
        let expected = Ring::pow(&t, 5).scale_by(&rat(256)) + MultiPoly::constant(rat(3125));
        assert_eq!(r, expected);
    }

    #[test]
    fn universal_agrees_with_direct_route() {
        for n in 1..=5 {
            let names = generic_coefficient_names(n);
            let q = BinaryForm::new(names.iter().map(|v| MultiPoly::var(v)).collect()).unwrap();
            let u = universal_discriminant(n).unwrap().clone();
            assert_eq!(discriminant_universal(&q).unwrap(), u);
            // the universal polynomial also covers a_n = 0
            let sample = form(&[2, -1, 0, 3, 1, 0][..=n]);
            assert_eq!(
                discriminant_universal(&sample).unwrap(),
                discriminant(&sample).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn square_free_examples() {
        assert!(is_square_free(&form(&[1, 0, 0, 0, 0, 1])).unwrap());
        let z2w = form(&[0, 0, 1, 0]);
        assert!(!is_square_free(&z2w).unwrap());
        assert!(!is_square_free_gcd(&z2w).unwrap());
        assert!(is_square_free(&form(&[0, 0])).is_err());
        // f_t = z^n + t z^(n-1) w + w^n is singular where (1-n)^(n-1) t^n + n^n = 0;
        // n = 2 is the degree with a rational such t.
        let ft = form(&[1, 2, 1]);
        assert!(!is_square_free(&ft).unwrap());
        assert!(!is_square_free_gcd(&ft).unwrap());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&frac(2, 1)), None);
        assert_eq!(rational_sqrt(&frac(-1, 1)), None);
    }

    fn small() -> impl Strategy<Value = BigRational> {
        (-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q))
    }

    fn root_pairs(max: usize) -> impl Strategy<Value = Vec<(BigRational, BigRational)>> {
        prop::collection::vec((small(), small()), 1..=max)
    }

    fn invertible() -> impl Strategy<Value = LinearMap2> {
        (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
            .prop_map(|(a, b, c, d)| LinearMap2::from_ints(a, b, c, d))
            .prop_filter("invertible", |m| !m.det().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn roots_definition_matches_resultant(pairs in root_pairs(5)) {
            prop_assume!(pairs.iter().all(|(z, w)| !(z.is_zero() && w.is_zero())));
            let q = BinaryForm::from_roots(&pairs).unwrap();
            prop_assert_eq!(discriminant(&q).unwrap(), discriminant_from_roots(&pairs).unwrap());
        }

        #[test]
        fn square_free_routes_agree(pairs in root_pairs(5)) {
            prop_assume!(pairs.iter().all(|(z, w)| !(z.is_zero() && w.is_zero())));
            let q = BinaryForm::from_roots(&pairs).unwrap();
            prop_assert_eq!(is_square_free(&q).unwrap(), is_square_free_gcd(&q).unwrap());
        }

        #[test]
        fn discriminant_weight_law(n in 3usize..=5, coeffs in prop::collection::vec(small(), 6), c in invertible()) {
            let q = BinaryForm::new(coeffs[..=n].to_vec()).unwrap();
            let moved = act(&c, &q).unwrap();
            let w = Ring::pow(&c.det(), (n * (n - 1)) as u32);
            prop_assert_eq!(discriminant(&q).unwrap(), w * discriminant(&moved).unwrap());
        }
    }
}
