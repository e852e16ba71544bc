use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::ratpoly::{binomial, MultiPoly, Ring};

/// Binary form `Q = Σ c_i z^i w^(n-i)` of degree `n`, stored by plain
/// coefficients `c_0..c_n` (index = exponent of `z`).
///
/// The binomial-convention coefficients `a_i = c_i / C(n, i)` used by most
/// classical formulas are available through [`BinaryForm::a`].
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<R: Ring = BigRational> {
    coeffs: Vec<R>,
}

impl<R: Ring> BinaryForm<R> {
    /// Form from plain coefficients `c_0..c_n`; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(AlgebraError::domain(
                "a binary form needs at least one coefficient",
            ));
        }
        Ok(BinaryForm { coeffs })
    }

    /// Form from binomial-convention coefficients `a_0..a_n`.
    pub fn from_binomial(a: Vec<R>) -> Result<Self> {
        let n = a.len().saturating_sub(1) as u32;
        let coeffs = a
            .into_iter()
            .enumerate()
            .map(|(i, ai)| ai.scale(&BigRational::from_integer(binomial(n, i as u32))))
            .collect();
        Self::new(coeffs)
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![R::zero(); degree + 1],
        }
    }

    /// `c · z^i w^(n-i)`.
    pub fn monomial(degree: usize, i: usize, c: R) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Plain coefficient of `z^i w^(n-i)`.
    pub fn c(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    /// Binomial-convention coefficient `a_i = c_i / C(n, i)`.
    pub fn a(&self, i: usize) -> R {
        let n = self.degree() as u32;
        let b = BigRational::from_integer(binomial(n, i as u32));
        self.coeffs[i].scale(&b.recip())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BinaryForm<S> {
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|c| c.clone() * k)
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        self.map(|c| c.scale(k))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::domain(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(())
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BinaryForm {
            coeffs: vec![R::one()],
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∂^(kz + kw) Q / ∂z^kz ∂w^kw`. Vanishes (as a form of the reduced
    /// degree) when the order exceeds the degree.
    pub fn partial(&self, kz: usize, kw: usize) -> Result<Self> {
        let n = self.degree();
        if kz + kw > n {
            return Err(AlgebraError::domain(format!(
                "derivative of order {} of a degree-{n} form",
                kz + kw
            )));
        }
        let m = n - kz - kw;
        let mut out = vec![R::zero(); m + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || j < kz || n - j < kw {
                continue;
            }
            let f = falling(j, kz) * falling(n - j, kw);
            out[j - kz] = c.scale(&BigRational::from_integer(f));
        }
        Ok(BinaryForm { coeffs: out })
    }

    pub fn dz(&self) -> Result<Self> {
        self.partial(1, 0)
    }

    pub fn dw(&self) -> Result<Self> {
        self.partial(0, 1)
    }

    /// `Q(x, y)` for ring elements `x, y`.
    pub fn eval(&self, x: &R, y: &R) -> R {
        let n = self.degree();
        let mut xp = vec![R::one()];
        let mut yp = vec![R::one()];
        for k in 1..=n {
            xp.push(xp[k - 1].clone() * x);
            yp.push(yp[k - 1].clone() * y);
        }
        self.coeffs
            .iter()
            .enumerate()
            .fold(R::zero(), |acc, (i, c)| {
                acc + c.clone() * &xp[i] * &yp[n - i]
            })
    }

    /// Linear substitution `Q(αz + βw, γz + δw)`.
    pub fn substitute(&self, alpha: &R, beta: &R, gamma: &R, delta: &R) -> Self {
        let n = self.degree();
        // Powers of the two substituted linear forms.
        let zl = BinaryForm {
            coeffs: vec![beta.clone(), alpha.clone()],
        };
        let wl = BinaryForm {
            coeffs: vec![delta.clone(), gamma.clone()],
        };
        let mut zp = vec![BinaryForm {
            coeffs: vec![R::one()],
        }];
        let mut wp = vec![BinaryForm {
            coeffs: vec![R::one()],
        }];
        for k in 1..=n {
            zp.push(zp[k - 1].mul(&zl));
            wp.push(wp[k - 1].mul(&wl));
        }
        let mut out = vec![R::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = zp[i].mul(&wp[n - i]);
            for (k, t) in term.coeffs.iter().enumerate() {
                out[k] = out[k].clone() + c.clone() * t;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Product of linear factors `Π (w_α z - z_α w)` over root pairs `(z_α, w_α)`.
    pub fn from_roots(pairs: &[(R, R)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(AlgebraError::domain("from_roots needs at least one root"));
        }
        let mut acc = BinaryForm {
            coeffs: vec![R::one()],
        };
        for (zr, wr) in pairs {
            let lin = BinaryForm {
                coeffs: vec![-zr.clone(), wr.clone()],
            };
            acc = acc.mul(&lin);
        }
        Ok(acc)
    }

    /// The form as a polynomial in the named variables (first ↔ `z`).
    pub fn to_poly(&self, zname: &str, wname: &str) -> MultiPoly
    where
        R: Into<MultiPoly>,
    {
        let n = self.degree() as u32;
        let mut acc = MultiPoly::zero();
        let z = MultiPoly::var(zname);
        let w = MultiPoly::var(wname);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = i as u32;
            let term: MultiPoly = c.clone().into();
            acc = acc + term * Ring::pow(&z, i) * Ring::pow(&w, n - i);
        }
        acc
    }
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i))
}

impl<R: Ring + fmt::Display> fmt::Display for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for i in (0..=n).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (i, n - i) {
                (0, 0) => String::new(),
                (a, 0) => pow_str("z", a),
                (0, b) => pow_str("w", b),
                (a, b) => format!("{}*{}", pow_str("z", a), pow_str("w", b)),
            };
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({c})*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pow_str(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// Invertible 2×2 matrix `[[a, b], [c, d]]` acting on `(z, w)` column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap2 {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl LinearMap2 {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        LinearMap2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| BigRational::from_integer(x.into());
        LinearMap2::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn compose(&self, other: &LinearMap2) -> LinearMap2 {
        LinearMap2 {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn inverse(&self) -> Result<LinearMap2> {
        let det = self.det();
        if det.is_zero() {
            return Err(AlgebraError::domain("singular linear map"));
        }
        let inv = det.recip();
        Ok(LinearMap2 {
            a: &self.d * &inv,
            b: -(&self.b * &inv),
            c: -(&self.c * &inv),
            d: &self.a * &inv,
        })
    }
}

/// The group action `Q_C(v) = Q(C^{-1} v)`.
pub fn act<R: Ring>(c: &LinearMap2, q: &BinaryForm<R>) -> Result<BinaryForm<R>> {
    let inv = c.inverse()?;
    Ok(q.substitute(
        &R::from_rational(&inv.a),
        &R::from_rational(&inv.b),
        &R::from_rational(&inv.c),
        &R::from_rational(&inv.d),
    ))
}
