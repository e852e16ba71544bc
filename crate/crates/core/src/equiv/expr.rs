//! Scalar parameter expressions: rationals and decimals, `+ - * / ^`,
//! parentheses, `i`, `pi`, and `sqrt`, `sin`, `cos`. Powers with a
//! non-integer exponent need a positive real base.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::{ComplexInterval, Interval};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::Ring;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    I,
    Pi,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_digit() || chars[k] == '.') {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            out.push(Tok::Num(parse_decimal(&text)?));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(AlgebraError::domain(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || AlgebraError::domain(format!("bad number {text:?}"));
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty() || frac.contains('.') {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)))
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(AlgebraError::domain(format!("expected '{c}'")))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            return Ok(Expr::Pow(Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(x)) => {
                self.pos += 1;
                Ok(Expr::Num(x))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "i" => Ok(Expr::I),
                    "pi" => Ok(Expr::Pi),
                    "sqrt" | "sin" | "cos" => {
                        self.expect('(')?;
                        let arg = Box::new(self.sum()?);
                        self.expect(')')?;
                        Ok(match name.as_str() {
                            "sqrt" => Expr::Sqrt(arg),
                            "sin" => Expr::Sin(arg),
                            _ => Expr::Cos(arg),
                        })
                    }
                    _ => Err(AlgebraError::domain(format!("unknown name {name:?}"))),
                }
            }
            Some(Tok::Op(c)) => Err(AlgebraError::domain(format!("unexpected '{c}'"))),
            None => Err(AlgebraError::domain("unexpected end of expression")),
        }
    }
}

/// Exact `x^(1/q)` when `x` is the `q`-th power of a rational.
fn exact_root(x: &BigRational, q: u32) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.nth_root(q);
        (r.pow(q) == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

fn small_exponent(e: &BigRational) -> Result<(i64, u32)> {
    let p = e.numer().to_i64();
    let q = e.denom().to_u32();
    match (p, q) {
        (Some(p), Some(q)) if p.unsigned_abs() <= 4096 && q <= 4096 => Ok((p, q)),
        _ => Err(AlgebraError::domain("exponent too large")),
    }
}

fn exact_pow(base: &BigRational, e: &BigRational) -> Result<Option<BigRational>> {
    let (p, q) = small_exponent(e)?;
    if p < 0 && base.is_zero() {
        return Err(AlgebraError::domain("zero to a negative power"));
    }
    let r = if q == 1 {
        Some(base.clone())
    } else {
        exact_root(base, q)
    };
    Ok(r.map(|r| {
        let y = Ring::pow(&r, p.unsigned_abs() as u32);
        if p < 0 {
            y.recip()
        } else {
            y
        }
    }))
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            toks: tokenize(src)?,
            pos: 0,
        };
        let e = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(AlgebraError::domain(format!("trailing input in {src:?}")));
        }
        Ok(e)
    }

    pub fn rational(x: BigRational) -> Expr {
        Expr::Num(x)
    }

    /// The exact value when the expression is a rational number.
    pub fn exact(&self) -> Result<Option<BigRational>> {
        let bin = |a: &Expr, b: &Expr| -> Result<Option<(BigRational, BigRational)>> {
            Ok(a.exact()?.zip(b.exact()?))
        };
        Ok(match self {
            Expr::Num(x) => Some(x.clone()),
            Expr::I | Expr::Pi => None,
            Expr::Neg(a) => a.exact()?.map(|x| -x),
            Expr::Add(a, b) => bin(a, b)?.map(|(x, y)| x + y),
            Expr::Sub(a, b) => bin(a, b)?.map(|(x, y)| x - y),
            Expr::Mul(a, b) => bin(a, b)?.map(|(x, y)| x * y),
            Expr::Div(a, b) => match bin(a, b)? {
                Some((_, y)) if y.is_zero() => {
                    return Err(AlgebraError::domain("division by zero"))
                }
                p => p.map(|(x, y)| x / y),
            },
            Expr::Pow(a, b) => {
                let e = b
                    .exact()?
                    .ok_or_else(|| AlgebraError::domain("exponents must be rational"))?;
                match a.exact()? {
                    Some(x) => exact_pow(&x, &e)?,
                    None => None,
                }
            }
            Expr::Sqrt(a) => match a.exact()? {
                Some(x) => exact_pow(&x, &BigRational::new(1.into(), 2.into()))?,
                None => None,
            },
            Expr::Sin(a) | Expr::Cos(a) => match a.exact()? {
                Some(x) if x.is_zero() => Some(if matches!(self, Expr::Sin(_)) {
                    BigRational::zero()
                } else {
                    BigRational::one()
                }),
                _ => None,
            },
        })
    }

    /// An enclosure with endpoints on the grid `2^-bits` (rational
    /// subexpressions are exact points).
    pub fn enclose(&self, bits: u32) -> Result<ComplexInterval> {
        if let Some(x) = self.exact()? {
            return Ok(ComplexInterval::from_rational(&x));
        }
        Ok(match self {
            Expr::Num(x) => ComplexInterval::from_rational(x),
            Expr::I => ComplexInterval::i(),
            Expr::Pi => ComplexInterval::real(pi(bits)),
            Expr::Neg(a) => -a.enclose(bits)?,
            Expr::Add(a, b) => a.enclose(bits)? + &b.enclose(bits)?,
            Expr::Sub(a, b) => a.enclose(bits)? - &b.enclose(bits)?,
            Expr::Mul(a, b) => a.enclose(bits)? * &b.enclose(bits)?,
            Expr::Div(a, b) => a.enclose(bits)?.div(&b.enclose(bits)?, 0)?,
            Expr::Pow(a, b) => {
                let e = b.exact()?.expect("checked by exact()");
                let (p, q) = small_exponent(&e)?;
                let base = a.enclose(bits)?;
                if q == 1 {
                    let y = Ring::pow(&base, p.unsigned_abs() as u32);
                    if p < 0 {
                        ComplexInterval::one().div(&y, 0)?
                    } else {
                        y
                    }
                } else {
                    ComplexInterval::real(real_part(&base)?.rational_power(p, q, bits)?)
                }
            }
            Expr::Sqrt(a) => {
                ComplexInterval::real(real_part(&a.enclose(bits)?)?.rational_power(1, 2, bits)?)
            }
            Expr::Sin(a) => ComplexInterval::real(sin_cos(&real_part(&a.enclose(bits)?)?, bits).0),
            Expr::Cos(a) => ComplexInterval::real(sin_cos(&real_part(&a.enclose(bits)?)?, bits).1),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::I => write!(f, "i"),
            Expr::Pi => write!(f, "pi"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/({b})"),
            Expr::Pow(a, b) => write!(f, "({a})^({b})"),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Sin(a) => write!(f, "sin({a})"),
            Expr::Cos(a) => write!(f, "cos({a})"),
        }
    }
}

fn real_part(x: &ComplexInterval) -> Result<Interval> {
    if !x.is_real() {
        return Err(AlgebraError::domain("this operation needs a real argument"));
    }
    Ok(x.re.clone())
}

/// `arctan(1/m)` in fixed point: each term is truncated to an integer
/// multiple of `2^-(bits+guard)`, which the enclosure accounts for.
fn arctan_recip(m: i64, bits: u32) -> Interval {
    let guard = 16u32;
    let shift = bits + guard;
    let unit = BigInt::one() << shift as usize;
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut pow = &unit / &m;
    let mut sum = BigInt::zero();
    let mut k = 0i64;
    while !pow.is_zero() {
        let term = &pow / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow /= &m2;
        k += 1;
    }
    // each of the k truncated terms is off by less than one unit, and the
    // tail is below the first omitted term, itself below one unit
    let err = BigRational::new(BigInt::from(2 * k + 2), unit.clone());
    Interval::ball(&BigRational::new(sum, unit), &err, bits + 2)
}

/// Enclosure of `π` (Machin's formula).
pub fn pi(bits: u32) -> Interval {
    let a = arctan_recip(5, bits);
    let b = arctan_recip(239, bits);
    let sixteen = Interval::point(BigRational::from_integer(16.into()));
    let four = Interval::point(BigRational::from_integer(4.into()));
    let p = sixteen * &a - &(four * &b);
    Interval::new(p.lo().clone(), p.hi().clone(), bits)
}

/// Enclosures of `sin x` and `cos x` from Taylor polynomials plus a
/// Lagrange remainder bound.
pub fn sin_cos(x: &Interval, bits: u32) -> (Interval, Interval) {
    let work = bits + 16;
    let x = Interval::new(x.lo().clone(), x.hi().clone(), work);
    let mag = x.mag();
    let eps = BigRational::new(1.into(), BigInt::one() << (bits as usize + 4));
    // find n with mag^n / n! < eps
    let mut n = 1u32;
    let mut bound = mag.clone();
    while bound >= eps {
        n += 1;
        bound = bound * &mag / BigRational::from_integer(n.into());
    }
    let mut sin = Interval::point(BigRational::zero());
    let mut cos = Interval::point(BigRational::zero());
    let mut power = Interval::point(BigRational::one());
    let mut fact = BigRational::one();
    for k in 0..n {
        if k > 0 {
            power = power * &x;
            fact *= BigRational::from_integer(k.into());
        }
        let term = power.clone() * &Interval::point(fact.recip());
        match k % 4 {
            0 => cos = cos + &term,
            1 => sin = sin + &term,
            2 => cos = cos - &term,
            _ => sin = sin - &term,
        }
    }
    let tail = Interval::ball(&BigRational::zero(), &bound, work);
    let clip = |v: Interval| {
        let one = BigRational::one();
        Interval::new(
            v.lo().clone().max(-one.clone()),
            v.hi().clone().min(one),
            bits,
        )
    };
    (clip(sin + &tail), clip(cos + &tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{frac, rat};

    #[test]
    fn parses_rationals_exactly() {
        assert_eq!(
            Expr::parse("3/4 - 1").unwrap().exact().unwrap(),
            Some(frac(-1, 4))
        );
        assert_eq!(
            Expr::parse("2^-3").unwrap().exact().unwrap(),
            Some(frac(1, 8))
        );
        assert_eq!(Expr::parse("-2^2").unwrap().exact().unwrap(), Some(rat(-4)));
        assert_eq!(
            Expr::parse("1.25").unwrap().exact().unwrap(),
            Some(frac(5, 4))
        );
        assert_eq!(
            Expr::parse("(9/4)^(3/2)").unwrap().exact().unwrap(),
            Some(frac(27, 8))
        );
        assert_eq!(Expr::parse("5^(-4/5)").unwrap().exact().unwrap(), None);
        assert!(Expr::parse("1/0").unwrap().exact().is_err());
        assert!(Expr::parse("2 +").is_err());
        assert!(Expr::parse("foo").is_err());
        assert!(Expr::parse("1 2").is_err());
    }

    #[test]
    fn pi_digits() {
        let p = pi(200);
        let lo = frac(314159265358979, 100000000000000);
        let hi = frac(314159265358980, 100000000000000);
        assert!(p.lo() > &lo && p.hi() < &hi);
        assert!(p.radius() < BigRational::new(1.into(), BigInt::one() << 190));
    }

    #[test]
    fn trig_identities() {
        let e = Expr::parse("cos(2*pi/5)^2 + sin(2*pi/5)^2")
            .unwrap()
            .enclose(150)
            .unwrap();
        assert!(e.re.contains(&rat(1)));
        assert!(e.radius() < BigRational::new(1.into(), BigInt::from(10).pow(30)));
        let c = Expr::parse("4*cos(2*pi/5) + 1")
            .unwrap()
            .enclose(150)
            .unwrap();
        let s5 = Expr::parse("sqrt(5)").unwrap().enclose(150).unwrap();
        assert!(c.overlaps(&s5));
    }

    #[test]
    fn complex_parameters() {
        let z = Expr::parse("(1 + i)^2").unwrap().enclose(64).unwrap();
        assert_eq!(z.as_point(), Some((rat(0), rat(2))));
        assert!(Expr::parse("(-8)^(1/3)").unwrap().enclose(64).is_err());
        assert!(Expr::parse("sin(i)").unwrap().enclose(64).is_err());
    }
}
