//! Elements `a + b·√d` of a quadratic field, enough to run the invariant
//! pipeline on forms whose coefficients are quadratic irrationalities.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug)]
pub struct QuadraticNumber {
    a: BigRational,
    b: BigRational,
    /// `None` for elements known to be rational.
    radicand: Option<BigInt>,
}

impl QuadraticNumber {
    /// `a + b·√d`. `d` must not be a perfect square (so the field is a genuine
    /// extension and every nonzero element is invertible).
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if !d.is_negative() && d.sqrt().pow(2) == d {
            return Err(AlgebraError::domain(format!("{d} is a perfect square")));
        }
        Ok(QuadraticNumber {
            a,
            b,
            radicand: Some(d),
        })
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticNumber {
            a,
            b: BigRational::zero(),
            radicand: None,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        self.radicand.as_ref()
    }

    /// The value as a rational, when the `√d` part vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn common_radicand(&self, other: &Self) -> Option<BigInt> {
        match (&self.radicand, &other.radicand) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing elements of different quadratic fields");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn d(&self) -> BigRational {
        self.radicand
            .clone()
            .map(BigRational::from_integer)
            .unwrap_or_else(BigRational::zero)
    }

    fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d() * &self.b * &self.b
    }

    fn conjugate(&self) -> Self {
        QuadraticNumber {
            a: self.a.clone(),
            b: -self.b.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Approximate complex value `(re, im)` in double precision, for display.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        match &self.radicand {
            None => (a, 0.0),
            Some(d) => {
                let d = d.to_f64().unwrap_or(f64::NAN);
                if d >= 0.0 {
                    (a + b * d.sqrt(), 0.0)
                } else {
                    (a, b * (-d).sqrt())
                }
            }
        }
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.b.is_zero() && other.b.is_zero() {
            return self.a == other.a;
        }
        self.a == other.a && self.b == other.b && self.radicand == other.radicand
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.radicand, self.b.is_zero()) {
            (Some(d), false) => write!(f, "{} + ({})*sqrt({})", self.a, self.b, d),
            _ => write!(f, "{}", self.a),
        }
    }
}

impl Add<&QuadraticNumber> for QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let radicand = self.common_radicand(rhs);
        QuadraticNumber {
            a: self.a + &rhs.a,
            b: self.b + &rhs.b,
            radicand,
        }
    }
}

impl Sub<&QuadraticNumber> for QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let radicand = self.common_radicand(rhs);
        QuadraticNumber {
            a: self.a - &rhs.a,
            b: self.b - &rhs.b,
            radicand,
        }
    }
}

impl Mul<&QuadraticNumber> for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let radicand = self.common_radicand(rhs);
        let d = radicand
            .clone()
            .map(BigRational::from_integer)
            .unwrap_or_else(BigRational::zero);
        QuadraticNumber {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            radicand,
        }
    }
}

impl Add for QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: QuadraticNumber) -> QuadraticNumber {
        self + &rhs
    }
}

impl Sub for QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: QuadraticNumber) -> QuadraticNumber {
        self - &rhs
    }
}

impl Mul for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: QuadraticNumber) -> QuadraticNumber {
        self * &rhs
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -self.a,
            b: -self.b,
            radicand: self.radicand,
        }
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        QuadraticNumber::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        QuadraticNumber::rational(BigRational::one())
    }
}

impl Ring for QuadraticNumber {
    fn from_rational(r: &BigRational) -> Self {
        QuadraticNumber::rational(r.clone())
    }

    fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(AlgebraError::domain("division by zero"));
        }
        let n = d.norm();
        let q = self.clone() * &d.conjugate();
        Ok(QuadraticNumber {
            a: q.a / &n,
            b: q.b / &n,
            radicand: q.radicand,
        })
    }
}
