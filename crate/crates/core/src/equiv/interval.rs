//! Interval arithmetic with rational endpoints.
//!
//! Every interval carries a working precision in bits; results of arithmetic
//! are rounded outward to the grid `2^-bits` of the coarser operand, so
//! endpoint sizes stay bounded while enclosures stay rigorous. Precision `0`
//! marks an exact value and disables rounding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::ratpoly::Ring;

fn two_pow(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigRational::from_integer(two_pow(bits));
    (x * &scale).floor() / scale
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigRational::from_integer(two_pow(bits));
    (x * &scale).ceil() / scale
}

/// A closed real interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
    bits: u32,
}

impl Interval {
    pub fn point(x: BigRational) -> Interval {
        Interval {
            lo: x.clone(),
            hi: x,
            bits: 0,
        }
    }

    /// `[lo, hi]` rounded outward to `bits`. Panics when `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational, bits: u32) -> Interval {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi, bits }.rounded()
    }

    /// `[x - r, x + r]`.
    pub fn ball(x: &BigRational, r: &BigRational, bits: u32) -> Interval {
        Interval::new(x - r, x + r, bits)
    }

    fn rounded(mut self) -> Interval {
        if self.bits > 0 {
            self.lo = round_down(&self.lo, self.bits);
            self.hi = round_up(&self.hi, self.bits);
        }
        self
    }

    fn with_bits(lo: BigRational, hi: BigRational, bits: u32) -> Interval {
        Interval { lo, hi, bits }.rounded()
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn radius(&self) -> BigRational {
        (&self.hi - &self.lo) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Largest absolute value of a point of the interval.
    pub fn mag(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// `[lo², hi²]` sharpened for intervals that straddle zero.
    pub fn sqr(&self) -> Interval {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        let bits = self.bits;
        if self.contains_zero() {
            Interval::with_bits(BigRational::zero(), a.max(b), bits)
        } else if a <= b {
            Interval::with_bits(a, b, bits)
        } else {
            Interval::with_bits(b, a, bits)
        }
    }

    /// `1/x`; fails when the interval contains zero.
    pub fn recip(&self, digits: u32) -> Result<Interval> {
        if self.contains_zero() {
            return Err(AlgebraError::Indeterminate {
                what: "denominator interval contains 0".into(),
                digits,
            });
        }
        Ok(Interval::with_bits(
            self.hi.recip(),
            self.lo.recip(),
            self.bits,
        ))
    }

    /// Enclosure of `x^(p/q)` for a positive interval, `q > 0`.
    pub fn rational_power(&self, p: i64, q: u32, bits: u32) -> Result<Interval> {
        if q == 0 {
            return Err(AlgebraError::domain("zero root index"));
        }
        if !self.lo.is_positive() {
            return Err(AlgebraError::domain(
                "fractional powers need a positive real base",
            ));
        }
        let bits = bits.max(self.bits);
        let pw = |x: &BigRational| -> BigRational {
            let e = p.unsigned_abs() as u32;
            let y = Ring::pow(x, e);
            if p < 0 {
                y.recip()
            } else {
                y
            }
        };
        let (a, b) = if p >= 0 {
            (pw(&self.lo), pw(&self.hi))
        } else {
            (pw(&self.hi), pw(&self.lo))
        };
        Ok(Interval::with_bits(
            root_below(&a, q, bits),
            root_above(&b, q, bits),
            bits,
        ))
    }
}

/// A rational `r ≤ x^(1/q)` within `2^-bits`.
fn root_below(x: &BigRational, q: u32, bits: u32) -> BigRational {
    let scaled = (x * BigRational::from_integer(two_pow(bits * q)))
        .floor()
        .to_integer();
    BigRational::new(scaled.nth_root(q), two_pow(bits))
}

/// A rational `r ≥ x^(1/q)` within `2^-bits`.
fn root_above(x: &BigRational, q: u32, bits: u32) -> BigRational {
    let scaled = (x * BigRational::from_integer(two_pow(bits * q)))
        .ceil()
        .to_integer();
    let r = scaled.nth_root(q);
    let r = if r.pow(q) == scaled { r } else { r + 1 };
    BigRational::new(r, two_pow(bits))
}

impl Add<&Interval> for Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval::with_bits(self.lo + &o.lo, self.hi + &o.hi, self.bits.max(o.bits))
    }
}

impl Sub<&Interval> for Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval::with_bits(self.lo - &o.hi, self.hi - &o.lo, self.bits.max(o.bits))
    }
}

impl Mul<&Interval> for Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let bits = self.bits.max(o.bits);
        if self.is_point() && o.is_point() {
            let x = self.lo * &o.lo;
            return Interval::with_bits(x.clone(), x, bits);
        }
        let p = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Interval::with_bits(lo, hi, bits)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
            bits: self.bits,
        }
    }
}

/// A rectangle `re + i·im` in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn real(re: Interval) -> ComplexInterval {
        ComplexInterval {
            im: Interval::point(BigRational::zero()),
            re,
        }
    }

    pub fn i() -> ComplexInterval {
        ComplexInterval {
            re: Interval::point(BigRational::zero()),
            im: Interval::point(BigRational::one()),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_point() && self.im.lo.is_zero()
    }

    pub fn bits(&self) -> u32 {
        self.re.bits.max(self.im.bits)
    }

    /// The exact value when both parts are points.
    pub fn as_point(&self) -> Option<(BigRational, BigRational)> {
        (self.re.is_point() && self.im.is_point()).then(|| (self.re.lo.clone(), self.im.lo.clone()))
    }

    /// Largest half-width of the two parts.
    pub fn radius(&self) -> BigRational {
        self.re.radius().max(self.im.radius())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, other: &ComplexInterval) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }

    pub fn contains(&self, re: &BigRational, im: &BigRational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    /// Largest coordinate distance between the midpoints.
    pub fn gap(&self, other: &ComplexInterval) -> BigRational {
        let dr = (self.re.midpoint() - other.re.midpoint()).abs();
        let di = (self.im.midpoint() - other.im.midpoint()).abs();
        dr.max(di)
    }

    pub fn div(&self, d: &ComplexInterval, digits: u32) -> Result<ComplexInterval> {
        if d.is_real() {
            let r = d.re.recip(digits)?;
            return Ok(ComplexInterval {
                re: self.re.clone() * &r,
                im: self.im.clone() * &r,
            });
        }
        let norm = d.re.sqr() + &d.im.sqr();
        let r = norm.recip(digits)?;
        let conj = ComplexInterval {
            re: d.re.clone(),
            im: -d.im.clone(),
        };
        let p = self.clone() * &conj;
        Ok(ComplexInterval {
            re: p.re * &r,
            im: p.im * &r,
        })
    }
}

impl fmt::Display for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30);
        write!(f, "{}", decimal(&self.re.midpoint(), digits))?;
        if !self.is_real() {
            let im = self.im.midpoint();
            let sign = if im.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}i", decimal(&im.abs(), digits))?;
        }
        Ok(())
    }
}

/// Decimal expansion of `x` with `digits` digits after the point, rounded to
/// nearest.
pub fn decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone()))
        .round()
        .to_integer();
    let (int, frac) = (&scaled / &scale, &scaled % &scale);
    let sign = if x.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let frac = frac.to_str_radix(10);
    format!("{sign}{int}.{}{frac}", "0".repeat(digits - frac.len()))
}

/// Scientific rendering `d.ddd…e±x` with `sig` significant digits.
pub fn scientific(x: &BigRational, sig: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut e: i64 = x.abs().to_integer().to_str_radix(10).len() as i64 - 1;
    if x.abs() < BigRational::one() {
        let mut y = x.abs();
        e = 0;
        while y < BigRational::one() {
            y *= BigRational::from_integer(10.into());
            e -= 1;
        }
    }
    let ten = BigRational::from_integer(10.into());
    let shifted = if e >= 0 {
        x / Ring::pow(&ten, e as u32)
    } else {
        x * Ring::pow(&ten, (-e) as u32)
    };
    format!("{}e{e}", decimal(&shifted, sig.saturating_sub(1)))
}

impl Zero for ComplexInterval {
    fn zero() -> Self {
        ComplexInterval::real(Interval::point(BigRational::zero()))
    }

    fn is_zero(&self) -> bool {
        self.as_point()
            .is_some_and(|(a, b)| a.is_zero() && b.is_zero())
    }
}

impl One for ComplexInterval {
    fn one() -> Self {
        ComplexInterval::real(Interval::point(BigRational::one()))
    }
}

impl Add for ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, o: ComplexInterval) -> ComplexInterval {
        self + &o
    }
}

impl Add<&ComplexInterval> for ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, o: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re + &o.re,
            im: self.im + &o.im,
        }
    }
}

impl Sub for ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, o: ComplexInterval) -> ComplexInterval {
        self - &o
    }
}

impl Sub<&ComplexInterval> for ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, o: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re - &o.re,
            im: self.im - &o.im,
        }
    }
}

impl Mul for ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, o: ComplexInterval) -> ComplexInterval {
        self * &o
    }
}

impl Mul<&ComplexInterval> for ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, o: &ComplexInterval) -> ComplexInterval {
        if self.is_real() && o.is_real() {
            return ComplexInterval::real(self.re * &o.re);
        }
        let re = self.re.clone() * &o.re - &(self.im.clone() * &o.im);
        let im = self.re * &o.im + &(self.im * &o.re);
        ComplexInterval { re, im }
    }
}

impl Neg for ComplexInterval {
    type Output = ComplexInterval;
    fn neg(self) -> ComplexInterval {
        ComplexInterval {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Ring for ComplexInterval {
    fn from_rational(r: &BigRational) -> Self {
        ComplexInterval::real(Interval::point(r.clone()))
    }

    fn exact_div(&self, d: &Self) -> Result<Self> {
        self.div(d, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{frac, rat};

    #[test]
    fn roots_enclose() {
        let x = Interval::point(rat(2));
        let r = x.rational_power(1, 2, 80).unwrap();
        assert!(r.lo().clone() * r.lo() <= rat(2) && rat(2) <= r.hi().clone() * r.hi());
        assert!(r.radius() < BigRational::new(1.into(), two_pow(78)));
        let p = Interval::point(rat(8)).rational_power(-2, 3, 40).unwrap();
        assert!(p.contains(&frac(1, 4)));
    }

    #[test]
    fn products_round_outward() {
        let third = Interval::new(frac(1, 3), frac(1, 3), 10);
        assert!(third.contains(&frac(1, 3)) && !third.is_point());
        let x = third.clone() * &third;
        assert!(x.contains(&frac(1, 9)));
        assert!(x.sqr().contains(&frac(1, 81)));
        let straddle = Interval::new(rat(-1), rat(2), 0);
        assert_eq!(straddle.sqr().lo(), &rat(0));
    }

    #[test]
    fn complex_division() {
        let i = ComplexInterval::i();
        let q = ComplexInterval::one().div(&i, 0).unwrap();
        assert_eq!(q.as_point(), Some((rat(0), rat(-1))));
        assert!(ComplexInterval::one()
            .div(&ComplexInterval::zero(), 20)
            .is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&frac(-1, 3), 4), "-0.3333");
        assert_eq!(decimal(&frac(2, 3), 2), "0.67");
        assert_eq!(decimal(&frac(1, 200), 2), "0.01");
        assert_eq!(scientific(&frac(12345, 1), 3), "1.23e4");
        assert_eq!(scientific(&frac(-3, 1000), 2), "-3.0e-3");
    }
}
