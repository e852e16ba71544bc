use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expr::Expr;
use super::interval::{scientific, ComplexInterval};
use crate::binform::{is_square_free, BinaryForm};
use crate::classical::{f_t, quartic_invariants, quintic_invariants, ClosedForm, InvariantValue};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::Ring;

/// Default working accuracy, in decimal digits, of the numeric path.
pub const DEFAULT_DIGITS: u32 = 50;

/// Number of precision doublings tried before giving up.
const MAX_DOUBLINGS: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

/// An enclosure of a complex number produced at `bits` of working precision
/// whose radius is at most `10^-digits`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericValue {
    pub value: ComplexInterval,
    pub digits: u32,
    pub bits: u32,
}

impl NumericValue {
    /// Rigorous bound on the distance (per coordinate) from the midpoint to
    /// the true value.
    pub fn error_bound(&self) -> BigRational {
        self.value.radius()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.value.contains(x, &BigRational::zero())
    }

    pub fn agrees_with(&self, other: &NumericValue) -> bool {
        self.value.overlaps(&other.value)
    }

    /// Midpoint rendered with `digits` digits after the point.
    pub fn to_decimal(&self) -> String {
        format!("{:.*}", self.digits as usize, self.value)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Numeric(NumericValue),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Exact(x) => x.to_string(),
            Value::Numeric(v) => v.to_decimal(),
        }
    }
}

/// One compared invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub name: String,
    pub left: Value,
    pub right: Value,
    pub equal: bool,
}

impl Comparison {
    fn exact(name: &str, left: BigRational, right: BigRational) -> Comparison {
        Comparison {
            name: name.into(),
            equal: left == right,
            left: Value::Exact(left),
            right: Value::Exact(right),
        }
    }

    fn numeric(name: &str, left: NumericValue, right: NumericValue) -> Comparison {
        Comparison {
            name: name.into(),
            equal: left.agrees_with(&right),
            left: Value::Numeric(left),
            right: Value::Numeric(right),
        }
    }

    /// Distance between the two midpoints, numeric comparisons only.
    pub fn gap(&self) -> Option<BigRational> {
        match (&self.left, &self.right) {
            (Value::Numeric(a), Value::Numeric(b)) => Some(a.value.gap(&b.value)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    pub mode: Mode,
    pub witness: Vec<Comparison>,
    /// Decimal digits requested (numeric mode).
    pub precision: Option<u32>,
    /// Largest sum of the two radii among the comparisons: values closer
    /// than this were declared equal (numeric mode).
    pub tolerance: Option<BigRational>,
}

impl EquivalenceVerdict {
    fn exact(witness: Vec<Comparison>) -> EquivalenceVerdict {
        EquivalenceVerdict {
            equivalent: witness.iter().all(|c| c.equal),
            mode: Mode::Exact,
            witness,
            precision: None,
            tolerance: None,
        }
    }

    fn numeric(witness: Vec<Comparison>, digits: u32) -> EquivalenceVerdict {
        let tolerance = witness
            .iter()
            .filter_map(|c| match (&c.left, &c.right) {
                (Value::Numeric(a), Value::Numeric(b)) => Some(a.error_bound() + b.error_bound()),
                _ => None,
            })
            .max();
        EquivalenceVerdict {
            equivalent: witness.iter().all(|c| c.equal),
            mode: Mode::Numeric,
            witness,
            precision: Some(digits),
            tolerance,
        }
    }

    pub fn max_gap(&self) -> Option<BigRational> {
        self.witness.iter().filter_map(Comparison::gap).max()
    }
}

fn ten_pow_neg(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

fn initial_bits(digits: u32) -> u32 {
    digits * 10 / 3 + 32
}

/// Runs `f` at increasing precision until the result has radius at most
/// `10^-digits`. `Indeterminate` failures also trigger a retry.
pub fn adaptive(
    digits: u32,
    what: &str,
    f: impl Fn(u32) -> Result<ComplexInterval>,
) -> Result<NumericValue> {
    let target = ten_pow_neg(digits);
    let mut bits = initial_bits(digits);
    for _ in 0..=MAX_DOUBLINGS {
        match f(bits) {
            Ok(v) if v.radius() <= target => {
                return Ok(NumericValue {
                    value: v,
                    digits,
                    bits,
                })
            }
            Ok(_) | Err(AlgebraError::Indeterminate { .. }) => bits *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(AlgebraError::Indeterminate {
        what: what.into(),
        digits,
    })
}

/// Evaluates a closed-form family invariant at numeric parameters with an
/// error bound of at most `10^-digits`.
pub fn numeric_eval(form: ClosedForm, s: &Expr, t: &Expr, digits: u32) -> Result<NumericValue> {
    if digits < 20 {
        return Err(AlgebraError::domain(
            "numeric evaluation needs digits >= 20",
        ));
    }
    adaptive(digits, form.name(), |bits| {
        let v: InvariantValue<ComplexInterval> = form.eval(&s.enclose(bits)?, &t.enclose(bits)?);
        if v.denominator.is_zero() {
            return Err(AlgebraError::domain(format!(
                "{} is undefined here: its denominator vanishes",
                form.name()
            )));
        }
        v.numerator.div(&v.denominator, digits)
    })
}

fn require(q: &BinaryForm, n: usize) -> Result<()> {
    if q.degree() != n {
        return Err(AlgebraError::domain(format!(
            "expected a form of degree {n}, got degree {}",
            q.degree()
        )));
    }
    if q.is_zero() || !is_square_free(q)? {
        return Err(AlgebraError::domain(format!(
            "the form {q} is not square-free"
        )));
    }
    Ok(())
}

fn value_of(v: &InvariantValue) -> BigRational {
    v.value().expect("defined on square-free forms")
}

/// Linear equivalence of square-free quartics: equal `𝖩`.
pub fn equivalent_quartics(q1: &BinaryForm, q2: &BinaryForm) -> Result<EquivalenceVerdict> {
    require(q1, 4)?;
    require(q2, 4)?;
    let (a, b) = (quartic_invariants(q1)?, quartic_invariants(q2)?);
    Ok(EquivalenceVerdict::exact(vec![Comparison::exact(
        "J",
        value_of(&a.j),
        value_of(&b.j),
    )]))
}

/// Linear equivalence of square-free quintics: equal `(J, K, L)`.
pub fn equivalent_quintics(q1: &BinaryForm, q2: &BinaryForm) -> Result<EquivalenceVerdict> {
    require(q1, 5)?;
    require(q2, 5)?;
    let (a, b) = (quintic_invariants(q1)?, quintic_invariants(q2)?);
    Ok(EquivalenceVerdict::exact(vec![
        Comparison::exact("J", value_of(&a.j), value_of(&b.j)),
        Comparison::exact("K", value_of(&a.k), value_of(&b.k)),
        Comparison::exact("L", value_of(&a.l), value_of(&b.l)),
    ]))
}

fn admissibility_condition(n: usize) -> String {
    let lead = BigInt::from(1 - n as i64).pow(n as u32 - 1);
    let constant = BigInt::from(n).pow(n as u32);
    format!(
        "f_t must be square-free: t^{n} != -n^n/(1-n)^(n-1), i.e. {lead} t^{n} + {constant} != 0"
    )
}

/// `(1-n)^(n-1) t^n + n^n`, which vanishes exactly when `f_t` has a repeated
/// factor.
fn admissibility<R: Ring>(n: usize, t: &R) -> R {
    ClosedForm::DeltaFt(n)
        .eval(&R::zero(), t)
        .numerator
        .scale(&BigRational::from_integer(BigInt::from(n).pow(n as u32)))
}

/// Biholomorphic equivalence of the germs `V_t1`, `V_t2` of the family
/// `f_t = z^n + t z^(n-1) w + w^n`: decided by `t1^n = t2^n`.
pub fn germ_equiv_family_t(
    n: usize,
    t1: &Expr,
    t2: &Expr,
    digits: u32,
) -> Result<EquivalenceVerdict> {
    if n < 4 {
        return Err(AlgebraError::domain(
            "the family f_t is considered for n >= 4",
        ));
    }
    let name = format!("t^{n}");
    if let (Some(a), Some(b)) = (t1.exact()?, t2.exact()?) {
        for t in [&a, &b] {
            if admissibility(n, t).is_zero() {
                return Err(AlgebraError::domain(admissibility_condition(n)));
            }
        }
        let verdict = EquivalenceVerdict::exact(vec![Comparison::exact(
            &name,
            Ring::pow(&a, n as u32),
            Ring::pow(&b, n as u32),
        )]);
        if n == 5 {
            let check = equivalent_quintics(&f_t(5, a)?, &f_t(5, b)?)?;
            if check.equivalent != verdict.equivalent {
                return Err(AlgebraError::domain(
                    "t^5 comparison and (J, K, L) comparison disagree",
                ));
            }
        }
        return Ok(verdict);
    }
    let mut sides = Vec::new();
    for t in [t1, t2] {
        let adm = adaptive(digits, "admissibility", |bits| {
            let x = admissibility(n, &t.enclose(bits)?);
            if x.is_zero() {
                return Err(AlgebraError::domain(admissibility_condition(n)));
            }
            Ok(x)
        });
        match adm {
            Ok(v) if !v.value.contains_zero() => {}
            Ok(_) | Err(AlgebraError::Indeterminate { .. }) => {
                return Err(AlgebraError::domain(format!(
                    "{} (could not be certified at {digits} digits)",
                    admissibility_condition(n)
                )))
            }
            Err(e) => return Err(e),
        }
        sides.push(adaptive(digits, &name, |bits| {
            Ok(Ring::pow(&t.enclose(bits)?, n as u32))
        })?);
    }
    let right = sides.pop().expect("two sides");
    let left = sides.pop().expect("two sides");
    Ok(EquivalenceVerdict::numeric(
        vec![Comparison::numeric(&name, left, right)],
        digits,
    ))
}

fn st_condition() -> String {
    "f_{s,t} must be square-free: 256 s^5 - 1600 s^3 t - 27 s^2 t^4 + 2250 s t^2 + 108 t^5 + 3125 != 0"
        .into()
}

const JKL: [ClosedForm; 3] = [ClosedForm::J, ClosedForm::K, ClosedForm::L];

/// Biholomorphic equivalence of the germs `V_{s1,t1}`, `V_{s2,t2}` of the
/// family `f_{s,t} = z^5 + s z^4 w + t z^3 w^2 + w^5`: `j`, `k`, `ℓ` all agree.
/// Rational parameters are compared exactly, anything else numerically.
pub fn germ_equiv_family_st(
    p1: (&Expr, &Expr),
    p2: (&Expr, &Expr),
    digits: u32,
) -> Result<EquivalenceVerdict> {
    let exact = [p1.0, p1.1, p2.0, p2.1]
        .iter()
        .map(|e| e.exact())
        .collect::<Result<Vec<_>>>()?;
    if let [Some(s1), Some(t1), Some(s2), Some(t2)] = &exact[..] {
        let mut witness = Vec::new();
        for (s, t) in [(s1, t1), (s2, t2)] {
            if ClosedForm::DeltaFst.eval(s, t).numerator.is_zero() {
                return Err(AlgebraError::domain(st_condition()));
            }
        }
        for f in JKL {
            let a = f.eval(s1, t1).value().expect("defined");
            let b = f.eval(s2, t2).value().expect("defined");
            witness.push(Comparison::exact(f.name(), a, b));
        }
        return Ok(EquivalenceVerdict::exact(witness));
    }
    for (s, t) in [p1, p2] {
        let d = numeric_eval(ClosedForm::DeltaFst, s, t, digits)?;
        if d.value.contains_zero() {
            return Err(AlgebraError::domain(format!(
                "{} (could not be certified at {digits} digits)",
                st_condition()
            )));
        }
    }
    let witness = JKL
        .iter()
        .map(|&f| {
            Ok(Comparison::numeric(
                f.name(),
                numeric_eval(f, p1.0, p1.1, digits)?,
                numeric_eval(f, p2.0, p2.1, digits)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceVerdict::numeric(witness, digits))
}

impl std::fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mode = match self.mode {
            Mode::Exact => "exact".to_string(),
            Mode::Numeric => format!("numeric, {} digits", self.precision.unwrap_or(0)),
        };
        writeln!(
            f,
            "{} ({mode})",
            if self.equivalent {
                "equivalent"
            } else {
                "not equivalent"
            }
        )?;
        for c in &self.witness {
            write!(
                f,
                "  {}: {} vs {}",
                c.name,
                c.left.render(),
                c.right.render()
            )?;
            if let Some(g) = c.gap() {
                write!(f, " (gap {})", scientific(&g, 3))?;
            }
            writeln!(f, "{}", if c.equal { "" } else { "  [differs]" })?;
        }
        Ok(())
    }
}
