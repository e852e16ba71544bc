use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::checks::constant_in_t;
use super::report::EvidenceReport;
use crate::classical::{f_t, g_t_cleared, h_t_cleared, quintic_invariants};
use crate::error::Result;
use crate::ratpoly::{frac, rat, MultiPoly, QuadraticNumber, Ring};

/// Bound on `|p|, |q|` for the `t = p/q` (or `v = p/q`) search grids.
pub const SEARCH_BOUND: i64 = 30;

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`, each value once, in order of
/// increasing height.
pub fn rational_grid(bound: i64) -> Vec<BigRational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in 0..=bound {
        for q in 1..=h.max(1) {
            for p in -h..=h {
                if p.abs().max(q) != h {
                    continue;
                }
                let x = frac(p, q);
                if seen.insert(x.clone()) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Two parameters with `K(h_{t1}) = K(h_{t2})` and `L(h_{t1}) = -L(h_{t2}) != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HtPair {
    pub t1: QuadraticNumber,
    pub t2: QuadraticNumber,
    /// `v = t² - t` for each parameter.
    pub v1: BigRational,
    pub v2: BigRational,
    pub k: BigRational,
    pub l1: BigRational,
}

impl HtPair {
    pub fn is_rational(&self) -> bool {
        self.t1.to_rational().is_some() && self.t2.to_rational().is_some()
    }
}

/// `(K, L)` of `h_t` when both are defined and rational.
fn kl<R: Ring>(
    t: R,
    to_rat: impl Fn(&R) -> Option<BigRational>,
) -> Option<(BigRational, BigRational)> {
    let inv = quintic_invariants(&h_t_cleared(t)).ok()?;
    let k = to_rat(&inv.k.value()?)?;
    let l = to_rat(&inv.l.value()?)?;
    Some((k, l))
}

/// The root `t = (1 + √(1+4v))/2` of `t² - t = v`, in `Q` or a quadratic field.
pub fn root_of_level(v: &BigRational) -> Result<QuadraticNumber> {
    let disc = rat(1) + rat(4) * v;
    let (a, b) = (disc.numer().clone(), disc.denom().clone());
    let ab = &a * &b;
    let half = frac(1, 2);
    if !ab.is_negative() && ab.sqrt().pow(2) == ab {
        let r = BigRational::new(ab.sqrt(), b);
        return Ok(QuadraticNumber::rational(half * (rat(1) + r)));
    }
    let coeff = BigRational::new(BigInt::from(1), BigInt::from(2) * &b);
    QuadraticNumber::new(half, coeff, ab)
}

/// Pairs `(x1, x2)` of grid entries, in grid order, whose `K` values agree and
/// whose `L` values are opposite and nonzero.
fn pair_up<T: Clone>(values: &[(T, BigRational, BigRational)]) -> Vec<(T, T)> {
    let mut by_k: HashMap<&BigRational, Vec<usize>> = HashMap::new();
    for (i, (_, k, _)) in values.iter().enumerate() {
        by_k.entry(k).or_default().push(i);
    }
    let mut out = Vec::new();
    for (i, (x, k, l)) in values.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        for &j in &by_k[k] {
            if j > i && values[j].2 == -l {
                out.push((x.clone(), values[j].0.clone()));
            }
        }
    }
    out
}

/// Scans `t = p/q` with `|p|, |q| <= bound` for a pair. `None` when the grid
/// is exhausted.
pub fn search_h_rational(bound: i64) -> Option<(BigRational, BigRational)> {
    let grid: Vec<BigRational> = rational_grid(bound)
        .into_iter()
        .filter(|t| !t.is_zero() && *t != rat(1))
        .collect();
    let values: Vec<_> = grid
        .par_iter()
        .filter_map(|t| {
            kl(t.clone(), |x: &BigRational| Some(x.clone())).map(|(k, l)| (t.clone(), k, l))
        })
        .collect();
    pair_up(&values).into_iter().next()
}

/// Scans the level parameter `v = t² - t = p/q` with `|p|, |q| <= bound`,
/// taking `t` in `Q(√(1+4v))`; the invariants of `h_t` depend on `v` only, so
/// they come out rational. Returns the first pair in grid order.
pub fn search_h_quadratic(bound: i64) -> Option<HtPair> {
    let grid: Vec<BigRational> = rational_grid(bound)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let values: Vec<_> = grid
        .par_iter()
        .filter_map(|v| {
            let t = root_of_level(v).ok()?;
            kl(t, QuadraticNumber::to_rational).map(|(k, l)| (v.clone(), k, l))
        })
        .collect();
    let (v1, v2) = pair_up(&values).into_iter().next()?;
    let (t1, t2) = (root_of_level(&v1).ok()?, root_of_level(&v2).ok()?);
    let (k, l1) = kl(t1.clone(), QuadraticNumber::to_rational)?;
    Some(HtPair {
        t1,
        t2,
        v1,
        v2,
        k,
        l1,
    })
}

/// Recomputes both sides of a claimed pair from scratch.
pub fn verify_h_pair(pair: &HtPair) -> bool {
    match (
        kl(pair.t1.clone(), QuadraticNumber::to_rational),
        kl(pair.t2.clone(), QuadraticNumber::to_rational),
    ) {
        (Some((k1, l1)), Some((k2, l2))) => {
            k1 == k2 && l1 == -l2 && !l1.is_zero() && pair.t1 != pair.t2
        }
        _ => false,
    }
}

fn vanishes(v: &crate::classical::InvariantValue<MultiPoly>) -> bool {
    v.numerator.is_zero() && v.is_defined()
}

fn symbolic(report: &mut EvidenceReport, label: &str, ok: bool, why: &str) {
    report.require(ok, format!("{label}, symbolic in t"), why);
}

/// The three quintic families on which one of `J, K, L` is not determined by
/// the other two, plus the search for the `h_t` pair.
pub fn counterexample_suite() -> EvidenceReport {
    let mut report = EvidenceReport::new("counterexample triple");
    let t = MultiPoly::var("t");

    match quintic_invariants(&f_t(5, t.clone()).expect("n = 5")) {
        Ok(i) => {
            symbolic(
                &mut report,
                "f_t",
                vanishes(&i.k) && vanishes(&i.l),
                "K or L does not vanish",
            );
            symbolic(&mut report, "f_t", !constant_in_t(&i.j, 1), "J is constant");
        }
        Err(e) => report.fail("f_t", e.to_string()),
    }

    match quintic_invariants(&g_t_cleared(t.clone())) {
        Ok(i) => {
            symbolic(
                &mut report,
                "g_t",
                vanishes(&i.j) && vanishes(&i.l),
                "J or L does not vanish",
            );
            symbolic(&mut report, "g_t", !constant_in_t(&i.k, 1), "K is constant");
        }
        Err(e) => report.fail("g_t", e.to_string()),
    }
    report.note("g_t sampled at rational t only: t^5 = 7 +- 4 sqrt 3 has no rational solution, so t != 0 is the only exclusion");
    let samples = [rat(1), rat(2), frac(1, 2), rat(-3)];
    let ks: Vec<_> = samples
        .iter()
        .filter_map(|s| quintic_invariants(&g_t_cleared(s.clone())).ok()?.k.value())
        .collect();
    report.samples += samples.len();
    report.require(
        ks.len() == samples.len() && ks.iter().collect::<BTreeSet<_>>().len() > 1,
        "g_t at t = 1, 2, 1/2, -3",
        "K undefined or constant on rational samples",
    );

    match quintic_invariants(&h_t_cleared(t)) {
        Ok(i) => symbolic(&mut report, "h_t", constant_in_t(&i.j, 2), "J depends on t"),
        Err(e) => report.fail("h_t", e.to_string()),
    }

    let b = SEARCH_BOUND;
    match search_h_rational(b) {
        Some((t1, t2)) => report.note(format!("rational pair found: t1 = {t1}, t2 = {t2}")),
        None => report.note(format!(
            "rational search exhausted: no pair with t = p/q, |p|, |q| <= {b}"
        )),
    }
    match search_h_quadratic(b) {
        Some(pair) if verify_h_pair(&pair) => {
            report.note(format!(
                "pair found on level sets v = t^2 - t: v1 = {}, v2 = {}, t1 = {}, t2 = {}",
                pair.v1, pair.v2, pair.t1, pair.t2
            ));
            report.constant("K(h_t1) = K(h_t2)", pair.k.clone());
            report.constant("L(h_t1) = -L(h_t2)", pair.l1);
        }
        Some(pair) => report.fail(
            format!("v1 = {}, v2 = {}", pair.v1, pair.v2),
            "pair does not verify",
        ),
        None => report.fail(
            format!("v = p/q, |p|, |q| <= {b}"),
            "search exhausted; enlarge the range",
        ),
    }
    report.samples += 3;
    report
}
