//! The parametric families and the closed-form rational functions displayed
//! for them. Everything is generic over the coefficient ring, so the same
//! code evaluates at rationals, symbolically in `s, t`, or on intervals.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::value::InvariantValue;
use crate::binform::BinaryForm;
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{binomial, factorial, Ring};

fn r<R: Ring>(n: i64) -> R {
    R::from_int(n)
}

fn big<R: Ring>(n: BigInt) -> R {
    R::from_rational(&BigRational::from_integer(n))
}

/// `f_t = z^n + t z^(n-1) w + w^n`.
pub fn f_t<R: Ring>(n: usize, t: R) -> Result<BinaryForm<R>> {
    if n < 2 {
        return Err(AlgebraError::domain("f_t needs n >= 2"));
    }
    let mut c = vec![R::zero(); n + 1];
    c[0] = R::one();
    c[n - 1] = t;
    c[n] = R::one();
    BinaryForm::new(c)
}

/// `f_{s,t} = z^5 + s z^4 w + t z^3 w^2 + w^5`.
pub fn f_st<R: Ring>(s: R, t: R) -> BinaryForm<R> {
    BinaryForm::new(vec![R::one(), R::zero(), R::zero(), t, s, R::one()]).expect("six coefficients")
}

/// `t · g_t = t z^5 + 5t^2 z^4 w + 5 z w^4 + t w^5`, the polynomial
/// multiple of `g_t = z^5 + 5t z^4 w + 5 z w^4 / t + w^5`.
pub fn g_t_cleared<R: Ring>(t: R) -> BinaryForm<R> {
    let five: R = r(5);
    BinaryForm::new(vec![
        t.clone(),
        five.clone(),
        R::zero(),
        R::zero(),
        five * &t * &t,
        t,
    ])
    .expect("six coefficients")
}

/// `t(1-t) · h_t = (1-t) z^5 + t w^5 + t(1-t)(z+w)^5`, the polynomial
/// multiple of `h_t = z^5/t + w^5/(1-t) + (z+w)^5`.
pub fn h_t_cleared<R: Ring>(t: R) -> BinaryForm<R> {
    let one_minus = R::one() - &t;
    let tt = t.clone() * &one_minus;
    let mut c: Vec<R> = (0..=5)
        .map(|i| tt.clone() * big::<R>(binomial(5, i)))
        .collect();
    c[5] = c[5].clone() + &one_minus;
    c[0] = c[0].clone() + &t;
    BinaryForm::new(c).expect("six coefficients")
}

/// `q_t = z^4 + t z^2 w^2 + w^4`.
pub fn q_t<R: Ring>(t: R) -> BinaryForm<R> {
    BinaryForm::new(vec![R::one(), R::zero(), t, R::zero(), R::one()]).expect("five coefficients")
}

/// `t ζ1^4 - 12 ζ1^2 ζ2^2 + t ζ2^4`.
pub fn bold_q_t<R: Ring>(t: R) -> BinaryForm<R> {
    BinaryForm::new(vec![t.clone(), R::zero(), r(-12), R::zero(), t]).expect("five coefficients")
}

/// The degree `2(n-2)` form in `ζ1, ζ2` proportional to every form associated to `f_t`.
pub fn bold_f_t<R: Ring>(n: usize, t: R) -> Result<BinaryForm<R>> {
    if n < 4 {
        return Err(AlgebraError::domain(
            "the associated f_t display needs n >= 4",
        ));
    }
    let nu = 2 * (n - 2);
    let ratio = t.scale(&BigRational::new(
        BigInt::from(1 - n as i64),
        BigInt::from(n),
    ));
    let ratio_pow: Vec<R> = (0..=nu).map(|k| Ring::pow(&ratio, k as u32)).collect();
    let b = |j: usize| big::<R>(binomial(nu as u32, j as u32));
    let tail = (t.clone() * &t).scale(&BigRational::new(BigInt::from(n - 1), BigInt::from(n * n)));
    let mut c = vec![R::zero(); nu + 1];
    for j in n - 1..=nu {
        c[j] = b(j) * &ratio_pow[j + 2 - n];
        c[nu - j] = tail.clone() * b(j) * &ratio_pow[nu - j];
    }
    c[n - 2] = b(n - 2);
    BinaryForm::new(c)
}

/// The sextic in `ζ1, ζ2` proportional to every form associated to `f_{s,t}`.
pub fn bold_f_st<R: Ring>(s: R, t: R) -> BinaryForm<R> {
    let p = |terms: &[(i64, u32, u32)]| -> R {
        terms.iter().fold(R::zero(), |acc, &(k, es, et)| {
            acc + r::<R>(k) * Ring::pow(&s, es) * Ring::pow(&t, et)
        })
    };
    let c6 = p(&[(160, 3, 0), (-300, 1, 1), (-27, 0, 4)]);
    let c5 = p(&[(-1200, 2, 0), (81, 1, 3), (1125, 0, 1)]);
    let c4 = p(&[(-270, 2, 2), (3750, 1, 0), (675, 0, 3)]);
    let c3 = p(&[(480, 3, 1), (-1650, 1, 2), (-6250, 0, 0)]);
    let c2 = p(&[(-480, 4, 0), (2100, 2, 1), (-1125, 0, 2)]);
    let c1 = p(&[(240, 3, 0), (27, 2, 3), (-825, 1, 1), (-108, 0, 4)]);
    let c0 = p(&[(-6, 3, 2), (-50, 2, 0), (24, 1, 3), (125, 0, 1)]);
    BinaryForm::new(vec![c0, c1, c2, c3, c4, c5, c6]).expect("seven coefficients")
}

/// The displayed closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `J(f_{s,t})`
    J,
    /// `K(f_{s,t})`
    K,
    /// `L(f_{s,t})`
    L,
    /// `𝐉(𝐟_{s,t})`
    BoldJ,
    /// `𝐊(𝐟_{s,t})`
    BoldK,
    /// `𝐋(𝐟_{s,t})`
    BoldL,
    /// The degree-10 polynomial `F(s, t)`.
    F,
    /// `I12(f_{s,t})`
    I12,
    /// `Δ(f_{s,t})`
    DeltaFst,
    /// `Δ(f_t)` for the given degree.
    DeltaFt(usize),
}

impl ClosedForm {
    pub const ST_FORMS: [ClosedForm; 8] = [
        ClosedForm::J,
        ClosedForm::K,
        ClosedForm::L,
        ClosedForm::BoldJ,
        ClosedForm::BoldK,
        ClosedForm::BoldL,
        ClosedForm::F,
        ClosedForm::I12,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::J => "j",
            ClosedForm::K => "k",
            ClosedForm::L => "l",
            ClosedForm::BoldJ => "bold_j",
            ClosedForm::BoldK => "bold_k",
            ClosedForm::BoldL => "bold_l",
            ClosedForm::F => "F",
            ClosedForm::I12 => "I12",
            ClosedForm::DeltaFst => "delta_fst",
            ClosedForm::DeltaFt(_) => "delta_ft",
        }
    }

    pub fn parse(name: &str) -> Option<ClosedForm> {
        Some(match name {
            "j" => ClosedForm::J,
            "k" => ClosedForm::K,
            "l" | "ell" => ClosedForm::L,
            "bold_j" => ClosedForm::BoldJ,
            "bold_k" => ClosedForm::BoldK,
            "bold_l" => ClosedForm::BoldL,
            "F" => ClosedForm::F,
            "I12" => ClosedForm::I12,
            "delta_fst" => ClosedForm::DeltaFst,
            _ => {
                let n = name
                    .strip_prefix("delta_ft")?
                    .trim_start_matches(['_', ':']);
                ClosedForm::DeltaFt(n.parse().ok()?)
            }
        })
    }

    /// Literal evaluation. `params` is `(s, t)`; `DeltaFt` reads only `t`.
    pub fn eval<R: Ring>(&self, s: &R, t: &R) -> InvariantValue<R> {
        let one = R::one();
        match *self {
            ClosedForm::DeltaFt(n) => {
                let n = n as u32;
                let lead = BigRational::new(
                    BigInt::from(1 - n as i64).pow(n - 1),
                    BigInt::from(n).pow(n),
                );
                InvariantValue::new(self.name(), Ring::pow(t, n).scale(&lead) + &one, one)
            }
            ClosedForm::DeltaFst => InvariantValue::new(self.name(), den(s, t), r(3125)),
            ClosedForm::I12 => {
                InvariantValue::new(self.name(), -p12(s, t), big(BigInt::from(10).pow(10)))
            }
            ClosedForm::F => InvariantValue::new(self.name(), big_f(s, t), one),
            ClosedForm::J => {
                let c = big::<R>(BigInt::from(1_440_000) * factorial(10));
                let u = lin(s, t);
                InvariantValue::new(self.name(), r::<R>(5) * &c * &c * &u * &u, den(s, t))
            }
            ClosedForm::K => {
                let p = p12(s, t);
                let d = den(s, t);
                let scale = big::<R>(BigInt::from(2).pow(20) * BigInt::from(5).pow(5));
                InvariantValue::new(self.name(), p.clone() * &p, scale * &d * &d * &d)
            }
            ClosedForm::L => {
                let c = big::<R>(BigInt::from(225) * factorial(10));
                let d = den(s, t);
                InvariantValue::new(
                    self.name(),
                    -(c * lin(s, t) * p12(s, t)),
                    r::<R>(4) * &d * &d,
                )
            }
            ClosedForm::BoldJ => {
                let u = lin(s, t);
                InvariantValue::new(self.name(), u.clone() * &u, den(s, t))
            }
            ClosedForm::BoldK => {
                let f = big_f(s, t);
                let d = den(s, t);
                InvariantValue::new(self.name(), f.clone() * &f, d.clone() * &d * &d)
            }
            ClosedForm::BoldL => {
                let d = den(s, t);
                InvariantValue::new(self.name(), lin(s, t) * big_f(s, t), d.clone() * &d)
            }
        }
    }
}

fn poly<R: Ring>(s: &R, t: &R, terms: &[(i64, u32, u32)]) -> R {
    terms.iter().fold(R::zero(), |acc, &(k, es, et)| {
        acc + r::<R>(k) * Ring::pow(s, es) * Ring::pow(t, et)
    })
}

/// `125 - 3 s t^2`.
pub fn lin<R: Ring>(s: &R, t: &R) -> R {
    poly(s, t, &[(125, 0, 0), (-3, 1, 2)])
}

/// `256 s^5 - 1600 s^3 t - 27 s^2 t^4 + 2250 s t^2 + 108 t^5 + 3125 = 3125 Δ(f_{s,t})`.
pub fn den<R: Ring>(s: &R, t: &R) -> R {
    poly(
        s,
        t,
        &[
            (256, 5, 0),
            (-1600, 3, 1),
            (-27, 2, 4),
            (2250, 1, 2),
            (108, 0, 5),
            (3125, 0, 0),
        ],
    )
}

/// `-10^10 I12(f_{s,t})`.
pub fn p12<R: Ring>(s: &R, t: &R) -> R {
    poly(
        s,
        t,
        &[
            (19200, 6, 2),
            (-160000, 4, 3),
            (-1120, 3, 6),
            (440000, 2, 4),
            (3600, 1, 7),
            (27, 0, 10),
            (-400000, 0, 5),
        ],
    )
}

/// `F(s, t)`.
pub fn big_f<R: Ring>(s: &R, t: &R) -> R {
    poly(
        s,
        t,
        &[
            (163200, 6, 2),
            (14800000, 5, 0),
            (-2100000, 4, 3),
            (5400, 3, 6),
            (-92500000, 3, 1),
            (7425000, 2, 4),
            (-52650, 1, 7),
            (116250000, 1, 2),
            (729, 0, 10),
            (-4556250, 0, 5),
            (312500000, 0, 0),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{frac, rat, MultiPoly};

    #[test]
    fn j_at_origin() {
        let v = ClosedForm::J.eval(&rat(0), &rat(0)).value().unwrap();
        let c = BigRational::from_integer(BigInt::from(1_440_000) * factorial(10));
        assert_eq!(v, rat(25) * &c * &c);
    }

    #[test]
    fn k_and_l_vanish_at_origin() {
        for f in [ClosedForm::K, ClosedForm::L] {
            assert_eq!(f.eval(&rat(0), &rat(0)).value(), Some(rat(0)));
        }
    }

    #[test]
    fn bold_j_is_scaled_j() {
        let (s, t) = (MultiPoly::var("s"), MultiPoly::var("t"));
        let j = ClosedForm::J.eval(&s, &t);
        let bj = ClosedForm::BoldJ.eval(&s, &t);
        let c = BigRational::from_integer(BigInt::from(1_440_000) * factorial(10));
        let scaled = InvariantValue::new(
            "j",
            j.numerator,
            j.denominator.scale_by(&(rat(5) * &c * &c)),
        );
        assert_eq!(scaled.same_as(&bj), Some(true));
    }

    #[test]
    fn bold_j_at_one_one() {
        assert_eq!(
            ClosedForm::BoldJ.eval(&rat(1), &rat(1)).value(),
            Some(frac(14884, 4112))
        );
    }

    #[test]
    fn displayed_sextic_at_one_one() {
        let f = bold_f_st(rat(1), rat(1));
        assert_eq!(f.c(6), &rat(-167));
        assert_eq!(f.c(5), &rat(6));
    }

    #[test]
    fn bold_f_t_degree_and_middle() {
        let f = bold_f_t(5, rat(0)).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(
            f.coeffs(),
            &[rat(0), rat(0), rat(0), rat(20), rat(0), rat(0), rat(0)]
        );
    }

    #[test]
    fn cleared_forms() {
        let g = g_t_cleared(rat(2));
        assert_eq!(
            g.coeffs(),
            &[rat(2), rat(5), rat(0), rat(0), rat(20), rat(2)]
        );
        // h at t = 2: -z^5 + 2w^5 - 2(z+w)^5
        let h = h_t_cleared(rat(2));
        assert_eq!(
            h.coeffs(),
            &[rat(0), rat(-10), rat(-20), rat(-20), rat(-10), rat(-3)]
        );
    }

    #[test]
    fn closed_form_names_round_trip() {
        for f in ClosedForm::ST_FORMS {
            assert_eq!(ClosedForm::parse(f.name()), Some(f));
        }
        assert_eq!(
            ClosedForm::parse("delta_ft_7"),
            Some(ClosedForm::DeltaFt(7))
        );
    }
}
