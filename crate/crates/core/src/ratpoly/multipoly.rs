use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{AlgebraError, Result};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients over a declared,
/// ordered set of variable names. No stored coefficient is ever zero.
#[derive(Clone, Debug, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), BigRational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut p = MultiPoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(AlgebraError::domain(format!(
                    "exponent tuple of length {} for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a polynomial with no non-constant terms.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    fn embed(&self, target: &[String]) -> MultiPoly {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| {
                    panic!("variable {} missing from embedding target", self.vars[i])
                });
                e[j] = k;
            }
            terms.insert(Monomial(e), c.clone());
        }
        MultiPoly {
            vars: target.to_vec(),
            terms,
        }
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out = a.to_vec();
        for v in b {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    fn aligned<'a>(a: &'a MultiPoly, b: &'a MultiPoly) -> (Cow<'a, MultiPoly>, Cow<'a, MultiPoly>) {
        if a.vars == b.vars {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let vars = Self::union_vars(&a.vars, &b.vars);
        let a2 = if a.vars == vars {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.embed(&vars))
        };
        let b2 = if b.vars == vars {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.embed(&vars))
        };
        (a2, b2)
    }

    fn add_impl(a: &MultiPoly, b: &MultiPoly, sign: bool) -> MultiPoly {
        let (a, b) = Self::aligned(a, b);
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            let c = if sign { c.clone() } else { -c };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_impl(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() || b.is_zero() {
            let vars = Self::union_vars(&a.vars, &b.vars);
            return MultiPoly {
                vars,
                terms: BTreeMap::new(),
            };
        }
        let (a, b) = Self::aligned(a, b);
        let mut acc: std::collections::HashMap<Vec<u32>, BigRational> =
            std::collections::HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        MultiPoly {
            vars: a.vars.clone(),
            terms,
        }
    }

    /// `self^e`; negative exponents are a domain error.
    pub fn checked_pow(&self, e: i64) -> Result<MultiPoly> {
        if e < 0 {
            return Err(AlgebraError::domain(format!("negative exponent {e}")));
        }
        let e = u32::try_from(e).map_err(|_| AlgebraError::domain("exponent too large"))?;
        Ok(Ring::pow(self, e))
    }

    pub fn scale_by(&self, r: &BigRational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Exact quotient by monomial-ordered long division. A nonzero remainder
    /// is reported as [`AlgebraError::NotDivisible`].
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        if d.is_zero() {
            return Err(AlgebraError::domain("division by the zero polynomial"));
        }
        let (p, d) = Self::aligned(self, d);
        if let Some(c) = d.constant_value() {
            return Ok(p.scale_by(&c.recip()));
        }
        let (dm, dc) = d.leading_term().expect("nonzero divisor");
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = p.into_owned();
        let mut quot = MultiPoly {
            vars: rem.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((lm, lc)) = rem.leading_term() {
            if !dm.divides(lm) {
                return Err(AlgebraError::NotDivisible);
            }
            let qm = Monomial(lm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect());
            let qc = lc / &dc;
            for (m, c) in &d.terms {
                let e = Monomial(m.0.iter().zip(&qm.0).map(|(a, b)| a + b).collect());
                rem.add_term(e, -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn derivative(&self, var: &str) -> MultiPoly {
        let Some(i) = self.var_index(var) else {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        };
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * BigRational::from_integer(k.into()));
        }
        out
    }

    /// Substitutes rational values for some variables; the others remain.
    pub fn eval(&self, assign: &[(&str, BigRational)]) -> MultiPoly {
        let idx: Vec<Option<&BigRational>> = self
            .vars
            .iter()
            .map(|v| assign.iter().find(|(n, _)| n == v).map(|(_, r)| r))
            .collect();
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (i, val) in idx.iter().enumerate() {
                if let Some(val) = val {
                    if e[i] > 0 {
                        coeff *= Ring::pow(*val, e[i]);
                        e[i] = 0;
                    }
                }
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Full evaluation at rational values; every occurring variable must be assigned.
    pub fn eval_rational(&self, assign: &[(&str, BigRational)]) -> Result<BigRational> {
        self.eval(assign)
            .constant_value()
            .ok_or_else(|| AlgebraError::domain(format!("unassigned variables remain in {self}")))
    }

    /// Evaluates at arbitrary ring elements, one per declared variable.
    pub fn eval_ring<R: Ring>(&self, values: &[R]) -> R {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut powers: Vec<Vec<R>> = vec![vec![R::one()]; values.len()];
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut term = R::from_rational(c);
            for (i, &k) in m.0.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().clone() * &values[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term * &powers[i][k];
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, var: &str, k: u32) -> MultiPoly {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let Some(i) = self.var_index(var) else {
            return if k == 0 { self.clone() } else { out };
        };
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut e = m.0.clone();
                e[i] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Coefficient of an exact monomial given as `(variable, exponent)` pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> BigRational {
        let mut e = vec![0u32; self.vars.len()];
        for (v, k) in monomial {
            match self.var_index(v) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return BigRational::zero(),
            }
        }
        self.terms
            .get(&Monomial(e))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl From<BigRational> for MultiPoly {
    fn from(c: BigRational) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, abs.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| MultiPoly::add_impl(a, b, true));
forward_binop!(Sub, sub, |a, b| MultiPoly::add_impl(a, b, false));
forward_binop!(Mul, mul, MultiPoly::mul_impl);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }
}

impl Ring for MultiPoly {
    fn from_rational(r: &BigRational) -> Self {
        MultiPoly::constant(r.clone())
    }

    fn exact_div(&self, d: &Self) -> Result<Self> {
        self.exact_divide(d)
    }

    fn scale(&self, r: &BigRational) -> Self {
        self.scale_by(r)
    }
}
