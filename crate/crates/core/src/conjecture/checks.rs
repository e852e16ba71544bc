use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::report::EvidenceReport;
use crate::binform::{discriminant, hessian, transvectant_scalar, BinaryForm};
use crate::classical::{
    big_f, bold_f_st, bold_f_t, bold_q_t, f_st, f_t, inv_j, inv_m, q_t, quartic_invariants,
    quintic_invariants, InvariantValue,
};
use crate::error::Result;
use crate::milnor::{associated_form, proportional};
use crate::ratpoly::{binomial, factorial, frac, rat, MultiPoly, Ring};

fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `𝖪(𝐪̂_t) = 𝖩(q_t)` at each admissible sample, with `𝐪̂_t` the
/// Milnor-algebra associated form, and as a rational-function identity in `t`
/// for the displayed `𝐪_t`.
pub fn check_quartic_duality(ts: &[BigRational]) -> EvidenceReport {
    let mut report = EvidenceReport::new("quartic duality");
    let excluded = [rat(0), rat(2), rat(-2), rat(6), rat(-6)];
    for t in ts {
        if excluded.contains(t) {
            report.note(format!(
                "t = {t} skipped: q_t or its associated form is not square-free"
            ));
            continue;
        }
        report.samples += 1;
        let lhs = associated_form(&q_t(t.clone()))
            .and_then(|a| quartic_invariants(&a.form))
            .map(|i| i.k.value());
        let rhs = quartic_invariants(&q_t(t.clone())).map(|i| i.j.value());
        let t2 = t * t;
        let closed = Ring::pow(&(&t2 + rat(12)), 3) / (rat(108) * Ring::pow(&(&t2 - rat(4)), 2));
        match (lhs, rhs) {
            (Ok(Some(k)), Ok(Some(j))) => {
                report.require(k == j, format!("t = {t}"), format!("K = {k}, J = {j}"));
                report.require(
                    j == closed,
                    format!("t = {t}"),
                    "J(q_t) differs from (t^2+12)^3/(108(t^2-4)^2)",
                );
            }
            _ => report.fail(format!("t = {t}"), "invariant undefined"),
        }
    }
    let t = MultiPoly::var("t");
    let sym = quartic_invariants(&bold_q_t(t.clone()))
        .and_then(|k| Ok((k.k, quartic_invariants(&q_t(t))?.j)));
    match sym {
        Ok((k, j)) if k.same_as(&j) == Some(true) => {
            report.note("K(bold q_t) = J(q_t) as rational functions of t")
        }
        _ => report.fail("symbolic in t", "K(bold q_t) != J(q_t)"),
    }
    report
}

/// Proportionality of the Milnor-algebra associated form to a displayed form
/// at every sample.
fn check_proportional<P: Sync + std::fmt::Display>(
    name: &str,
    samples: &[P],
    pair: impl Fn(&P) -> Result<(BinaryForm, BinaryForm)> + Sync,
) -> EvidenceReport {
    let mut report = EvidenceReport::new(name);
    let outcomes: Vec<_> = samples
        .par_iter()
        .map(|p| {
            let ok = pair(p).and_then(|(q, display)| {
                let a = associated_form(&q)?;
                Ok(matches!(proportional(&a.form, &display)?, Some(c) if !c.is_zero()))
            });
            (p.to_string(), ok)
        })
        .collect();
    report.samples = outcomes.len();
    for (p, ok) in outcomes {
        match ok {
            Ok(true) => {}
            Ok(false) => report.fail(p, "associated form not proportional to the display"),
            Err(e) => report.fail(p, e.to_string()),
        }
    }
    report
}

struct St(BigRational, BigRational);

impl std::fmt::Display for St {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(s, t) = ({}, {})", self.0, self.1)
    }
}

struct T(usize, BigRational);

impl std::fmt::Display for T {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n = {}, t = {}", self.0, self.1)
    }
}

/// Number of samples that certifies an identity between the associated form
/// and the display of `q_t` (`n = 4`): the cleared 2×2 minors have degree at
/// most 5 in `t`.
pub const QT_POINTS: usize = 6;

/// Side of the `(s, t)` grid for `f_{s,t}`: the cleared minors have degree at
/// most 10 in each parameter.
pub const FST_SIDE: usize = 11;

/// Samples certifying the `f_t` display for degree `n`.
pub fn ft_points(n: usize) -> usize {
    2 * (n - 2) + (n - 1) + 1
}

fn spread(k: usize) -> Vec<BigRational> {
    // 1, -1, 2, -2, 3, ... avoiding 0 and the non-square-free q_{±2}
    let mut out = Vec::new();
    let mut m = 1i64;
    while out.len() < k {
        for v in [m, -m] {
            if out.len() < k {
                out.push(rat(v));
            }
        }
        m += 1;
    }
    out
}

/// `associated_form(q_t) ∝ t ζ1^4 - 12 ζ1^2 ζ2^2 + t ζ2^4`.
pub fn check_associated_qt() -> EvidenceReport {
    let ts: Vec<BigRational> = spread(QT_POINTS + 4)
        .into_iter()
        .filter(|t| t != &rat(2) && t != &rat(-2))
        .collect();
    let mut r = check_proportional("associated form of q_t", &ts, |t| {
        Ok((q_t(t.clone()), bold_q_t(t.clone())))
    });
    r.note(format!(
        "{} admissible t, degree bound needs {QT_POINTS}",
        ts.len()
    ));
    r
}

/// `associated_form(f_{s,t})` is proportional to the displayed sextic on the
/// `side × side` grid `s, t ∈ {-k/2..}` minus non-square-free points.
pub fn check_associated_fst(side: usize) -> EvidenceReport {
    let vals: Vec<BigRational> = (0..side as i64)
        .map(|k| frac(k - side as i64 / 2, 2))
        .collect();
    let pts: Vec<St> = vals
        .iter()
        .flat_map(|s| vals.iter().map(move |t| St(s.clone(), t.clone())))
        .filter(|p| !crate::classical::den(&p.0, &p.1).is_zero())
        .collect();
    let mut r = check_proportional("associated form of f_{s,t}", &pts, |p| {
        Ok((
            f_st(p.0.clone(), p.1.clone()),
            bold_f_st(p.0.clone(), p.1.clone()),
        ))
    });
    r.note(format!("{side} x {side} grid of half-integers"));
    r
}

/// `associated_form(f_t) ∝ 𝐟_t` for one degree.
pub fn check_associated_ft(n: usize) -> EvidenceReport {
    let pts: Vec<T> = (0..ft_points(n) as i64)
        .map(|k| T(n, frac(k - 3, 2)))
        .collect();
    check_proportional(&format!("associated form of f_t, n = {n}"), &pts, |p| {
        Ok((f_t(p.0, p.1.clone())?, bold_f_t(p.0, p.1.clone())?))
    })
}

/// Solves `y = a x + b` from the first two points and checks the rest.
fn affine_fit(
    report: &mut EvidenceReport,
    label: &str,
    pts: &[(BigRational, BigRational)],
) -> Option<(BigRational, BigRational)> {
    let ((x0, y0), (x1, y1)) = (&pts[0], &pts[1]);
    let a = (y1 - y0) / (x1 - x0);
    let b = y0 - &a * x0;
    for (x, y) in &pts[2..] {
        report.require(
            &a * x + &b == *y,
            format!("{label} at x = {x}"),
            "not collinear",
        );
    }
    report.require(!a.is_zero(), label, "slope vanishes");
    Some((a, b))
}

/// The `f_t` evidence for each `n`: (a) associated forms ∝ `𝐟_t`;
/// (b) `(𝐟_t,𝐟_t)^(2(n-2)) = ((2(n-2))!)² C(2(n-2), n-2) Δ(f_t)` in `t`;
/// (c) `(H(𝐟_t),H(𝐟_t))^(2(2n-6)) = Δ² (ρΔ + σ)`; (d) `M(𝐟_t)` affine in `t^n`,
/// plus `1/J(f_t)` affine in `t^n`.
pub fn check_ft_associated(ns: &[usize]) -> EvidenceReport {
    let mut report = EvidenceReport::new("f_t and its associated form");
    report.note(
        "H(bold f_t) has degree 4n-12 = 2(2n-6), so (c) uses order 2(2n-6); an order 2(4n-6) transvectant of it would vanish",
    );
    for &n in ns {
        if !(5..=7).contains(&n) {
            report.note(format!("n = {n} skipped: supported degrees are 5, 6, 7"));
            continue;
        }
        report.absorb(check_associated_ft(n));
        let label = |s: &str| format!("n = {n}: {s}");

        // (b), symbolic in t
        let t = MultiPoly::var("t");
        let nu = 2 * (n - 2) as u32;
        let lhs = bold_f_t(n, t.clone()).and_then(|f| transvectant_scalar(&f, &f, nu as usize));
        let delta = f_t(n, t.clone()).and_then(|f| discriminant(&f));
        let c = big(factorial(nu) * factorial(nu) * binomial(nu, nu / 2));
        match (lhs, delta) {
            (Ok(l), Ok(d)) => match l.exact_divide(&d).ok().and_then(|q| q.constant_value()) {
                Some(ratio) => {
                    report.constant(&format!("(b) ratio (n = {n})"), ratio.clone());
                    report.require(
                        ratio == c,
                        label("(b)"),
                        format!(
                            "(bold f_t, bold f_t) = {ratio} Delta(f_t), displayed constant {c}"
                        ),
                    );
                }
                None => report.fail(
                    label("(b)"),
                    "transvectant not a constant multiple of Delta(f_t)",
                ),
            },
            _ => report.fail(label("(b)"), "computation failed"),
        }

        // (c), (d) and J on samples t = 1..6
        let ts: Vec<BigRational> = (1..=6).map(rat).collect();
        let mut c_pts = Vec::new();
        let mut m_pts = Vec::new();
        let mut j_pts = Vec::new();
        for t in &ts {
            let res = (|| -> Result<_> {
                let bf = bold_f_t(n, t.clone())?;
                let h = hessian(&bf)?;
                let hh = transvectant_scalar(&h, &h, 2 * (2 * n - 6))?;
                let d = discriminant(&f_t(n, t.clone())?)?;
                let m = inv_m(&bf)?.value();
                let j = inv_j(&f_t(n, t.clone())?)?.value();
                Ok((hh, d, m, j))
            })();
            match res {
                Ok((hh, d, Some(m), Some(j))) if !d.is_zero() && !j.is_zero() => {
                    let tn = Ring::pow(t, n as u32);
                    c_pts.push((d.clone(), hh / (&d * &d)));
                    m_pts.push((tn.clone(), m));
                    j_pts.push((tn, j.recip()));
                }
                _ => report.fail(label(&format!("t = {t}")), "undefined value"),
            }
        }
        report.samples += ts.len();
        if c_pts.len() < 4 {
            continue;
        }
        let fits = [
            (
                "rho",
                "sigma",
                affine_fit(&mut report, &label("(c)"), &c_pts),
            ),
            (
                "rho''",
                "sigma''",
                affine_fit(&mut report, &label("(d) M"), &m_pts),
            ),
            ("mu", "nu", affine_fit(&mut report, &label("1/J"), &j_pts)),
        ];
        for (a, b, fit) in fits {
            if let Some((x, y)) = fit {
                report.constant(&format!("{a} (n = {n})"), x);
                report.constant(&format!("{b} (n = {n})"), y);
            }
        }
    }
    report
}

/// `F(s,t) = -27·10^10 I12 + 115625/(4608·10!) Δ N + 5/(2 (19200·10!)³) N³`
/// with `N = (f², f²)^(10)`, as polynomials in `s, t`.
#[allow(non_snake_case)]
pub fn check_expressF() -> EvidenceReport {
    let mut report = EvidenceReport::new("F identity");
    report.samples = 1;
    let (s, t) = (MultiPoly::var("s"), MultiPoly::var("t"));
    let f = big_f(&s, &t);
    for (mono, want) in [([("s", 5)], 14_800_000), ([("t", 10)], 729)] {
        let got = f.coefficient(&mono);
        report.require(
            got == rat(want),
            format!("{mono:?}"),
            format!("coefficient {got}, expected {want}"),
        );
    }
    let inv = match quintic_invariants(&f_st(s, t)) {
        Ok(i) => i,
        Err(e) => {
            report.fail("symbolic", e.to_string());
            return report;
        }
    };
    let ten_f = big(factorial(10));
    let n = &inv.n10;
    let c2 = frac(115_625, 4608) / &ten_f;
    let c3 = frac(5, 2) / Ring::pow(&(rat(19200) * &ten_f), 3);
    let rhs = inv.i12.scale_by(&(rat(-27) * Ring::pow(&rat(10), 10)))
        + (inv.discriminant.clone() * n).scale_by(&c2)
        + Ring::pow(n, 3).scale_by(&c3);
    let diff = f - rhs;
    match diff.terms().next() {
        None => report.note("zero difference as a polynomial in s, t"),
        Some((m, c)) => report.fail(
            format!("monomial exponents {:?}", m.0),
            format!("difference coefficient {c}"),
        ),
    }
    report
}

/// `InvariantValue` is constant in `t` when it equals its value at `t0`.
pub(crate) fn constant_in_t(v: &InvariantValue<MultiPoly>, t0: i64) -> bool {
    let at = |p: &MultiPoly| p.eval_rational(&[("t", rat(t0))]);
    match (at(&v.numerator), at(&v.denominator)) {
        (Ok(n), Ok(d)) if !d.is_zero() => {
            v.same_as(&InvariantValue::new(
                v.name,
                MultiPoly::constant(n),
                MultiPoly::constant(d),
            )) == Some(true)
        }
        _ => false,
    }
}
