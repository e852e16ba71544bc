use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::report::{CalibrationResult, EvidenceReport};
use crate::classical::{
    big_f, bold_f_st, den, f_st, lin, quintic_invariants, sextic_basis, sextic_invariants,
    sextic_invariants_from_basis, ClosedForm, SexticBasis, SexticCalibration,
};
use crate::error::{AlgebraError, Result};
use crate::milnor::associated_form;
use crate::ratpoly::{factorial, frac, rat, solve, MultiPoly};

pub type Point = (BigRational, BigRational);

fn grid(ss: &[BigRational], ts: &[BigRational]) -> Vec<Point> {
    ss.iter()
        .flat_map(|s| ts.iter().map(move |t| (s.clone(), t.clone())))
        .collect()
}

/// 16 integer points, twice the number of sextic unknowns.
pub fn default_fit_grid() -> Vec<Point> {
    grid(
        &[rat(-2), rat(-1), rat(1), rat(2)],
        &[rat(-1), rat(1), rat(2), rat(3)],
    )
}

/// 20 points with non-integer `s`, disjoint from [`default_fit_grid`].
pub fn default_held_out_grid() -> Vec<Point> {
    grid(
        &[frac(1, 2), frac(3, 2), frac(-1, 2), frac(5, 2), frac(-3, 2)],
        &[rat(-2), frac(1, 3), frac(2, 3), rat(4)],
    )
}

fn admissible((s, t): &Point) -> bool {
    !den(s, t).is_zero() && !lin(s, t).is_zero()
}

fn show((s, t): &Point) -> String {
    format!("(s, t) = ({s}, {t})")
}

fn check_points(points: &[Point]) -> Result<()> {
    match points.iter().find(|p| !admissible(p)) {
        Some(p) => Err(AlgebraError::domain(format!(
            "calibration sample {} has vanishing discriminant or 125 - 3st^2",
            show(p)
        ))),
        None => Ok(()),
    }
}

fn bases(points: &[Point]) -> Result<Vec<SexticBasis<BigRational>>> {
    points
        .par_iter()
        .map(|(s, t)| sextic_basis(&bold_f_st(s.clone(), t.clone())))
        .collect()
}

/// Fits the degree-4 constants `alpha, beta` and the degree-10 combination
/// `gamma` so that the sextic `𝐉, 𝐋` of the displayed associated sextic reproduce
/// the closed forms `𝐣, 𝐥` on `fit`, then checks `𝐣, 𝐤, 𝐥` exactly on `held_out`.
///
/// Only the `𝐉` and `𝐋` targets enter the fit; `𝐤` is pure verification.
pub fn calibrate_sextics(fit: &[Point], held_out: &[Point]) -> Result<CalibrationResult> {
    if fit.len() < 16 {
        return Err(AlgebraError::domain(
            "calibration needs at least 16 samples (twice the 8 unknowns)",
        ));
    }
    if fit.iter().any(|p| held_out.contains(p)) {
        return Err(AlgebraError::domain(
            "fit and held-out samples must be disjoint",
        ));
    }
    check_points(fit)?;
    check_points(held_out)?;
    let fb = bases(fit)?;

    // 𝐣 = (3/5) I2² / E with E = (1 - 2α) I2² - 2β b
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for ((s, t), b) in fit.iter().zip(&fb) {
        let a2 = &b.a * &b.a;
        let l = lin(s, t);
        let e = frac(3, 5) * &a2 * den(s, t) / (&l * &l);
        rows.push(vec![rat(-2) * &a2, rat(-2) * &b.b]);
        rhs.push(e - a2);
    }
    let sol = solve(&rows, &rhs)
        .ok_or_else(|| AlgebraError::domain("basis insufficient: degree-4 system inconsistent"))?;
    if !sol.free.is_empty() {
        return Err(AlgebraError::domain(
            "basis insufficient: degree-4 system underdetermined",
        ));
    }
    let (alpha, beta) = (sol.x[0].clone(), sol.x[1].clone());

    // 𝐥 = 675 I2 I10 / E³
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for ((s, t), b) in fit.iter().zip(&fb) {
        let a2 = &b.a * &b.a;
        let e = &a2 - rat(2) * (&alpha * &a2 + &beta * &b.b);
        let d = den(s, t);
        let bold_l = lin(s, t) * big_f(s, t) / (&d * &d);
        rows.push(b.degree10().to_vec());
        rhs.push(bold_l * &e * &e * &e / (rat(675) * &b.a));
    }
    let sol = solve(&rows, &rhs)
        .ok_or_else(|| AlgebraError::domain("basis insufficient: degree-10 system inconsistent"))?;
    let gamma: [BigRational; 6] = sol.x.clone().try_into().expect("six unknowns");
    let calibration = SexticCalibration { alpha, beta, gamma };

    let hb = bases(held_out)?;
    let mut residuals = Vec::new();
    for ((s, t), b) in held_out.iter().zip(&hb) {
        let inv = sextic_invariants_from_basis(b, &calibration);
        let got = [&inv.j, &inv.k, &inv.l].map(|v| v.value());
        let want =
            [ClosedForm::BoldJ, ClosedForm::BoldK, ClosedForm::BoldL].map(|c| c.eval(s, t).value());
        let r: [BigRational; 3] = std::array::from_fn(|k| match (&got[k], &want[k]) {
            (Some(g), Some(w)) => g - w,
            _ => BigRational::one(),
        });
        if r.iter().any(|x| !x.is_zero()) {
            return Err(AlgebraError::domain(format!(
                "calibration rejected: nonzero held-out residual at {}",
                show(&(s.clone(), t.clone()))
            )));
        }
        residuals.push(r);
    }
    Ok(CalibrationResult {
        calibration,
        rank: sol.rank,
        fit_points: fit.to_vec(),
        held_out: held_out.to_vec(),
        residuals,
    })
}

/// The calibration on the default grids, computed once.
pub fn default_calibration() -> Result<&'static CalibrationResult> {
    static CELL: OnceLock<Result<CalibrationResult>> = OnceLock::new();
    CELL.get_or_init(|| calibrate_sextics(&default_fit_grid(), &default_held_out_grid()))
        .as_ref()
        .map_err(Clone::clone)
}

/// `5 (1440000 · 10!)²`
fn j_scale() -> BigRational {
    let c = BigRational::from_integer(BigInt::from(1_440_000) * factorial(10));
    rat(5) * &c * &c
}

/// Per-point values `[j, k, ℓ, 𝐣, 𝐤, 𝐥]`, the quintic ones from the quintic
/// pipeline and the sextic ones from the Milnor-algebra associated form.
fn pipeline_values(p: &Point, cal: &SexticCalibration) -> Result<[BigRational; 6]> {
    let q = f_st(p.0.clone(), p.1.clone());
    let qi = quintic_invariants(&q)?;
    let assoc = associated_form(&q)?;
    let si = sextic_invariants(&assoc.form, cal)?;
    let vals = [&qi.j, &qi.k, &qi.l, &si.j, &si.k, &si.l].map(|v| v.value());
    if vals.iter().any(Option::is_none) {
        return Err(AlgebraError::domain(format!(
            "undefined invariant at {}",
            show(p)
        )));
    }
    Ok(vals.map(Option::unwrap))
}

struct Fit {
    names: Vec<&'static str>,
    x: Vec<BigRational>,
}

fn fit_and_validate(
    report: &mut EvidenceReport,
    label: &str,
    names: Vec<&'static str>,
    features: impl Fn(&[BigRational; 6]) -> Vec<BigRational>,
    target: usize,
    fit: &[(Point, [BigRational; 6])],
    held: &[(Point, [BigRational; 6])],
) -> Option<Fit> {
    let rows: Vec<_> = fit.iter().map(|(_, v)| features(v)).collect();
    let rhs: Vec<_> = fit.iter().map(|(_, v)| v[target].clone()).collect();
    let Some(sol) = solve(&rows, &rhs) else {
        report.fail(format!("{label} fit"), "linear system inconsistent");
        return None;
    };
    if !sol.free.is_empty() {
        report.note(format!(
            "{label}: fit has {} free directions, set to 0",
            sol.free.len()
        ));
    }
    for (p, v) in held {
        let pred: BigRational = features(v).iter().zip(&sol.x).map(|(a, b)| a * b).sum();
        report.require(
            pred == v[target],
            show(p),
            format!("{label} fit does not reproduce the value"),
        );
    }
    Some(Fit { names, x: sol.x })
}

/// `𝐣 = j / (5 (1440000·10!)²)` symbolically and along the pipeline, and the
/// fitted expansions of `𝐤` in `k, ℓ, jℓ, j³, j², j` and of `𝐥` in `ℓ, j², j`
/// with the leading coefficients `2^20 3^6 5^5` and `-12/(25·10!)`.
pub fn check_connections(cal: &CalibrationResult) -> Result<EvidenceReport> {
    let mut report = EvidenceReport::new("connections");
    let (s, t) = (MultiPoly::var("s"), MultiPoly::var("t"));
    let j = ClosedForm::J.eval(&s, &t);
    let scaled = crate::classical::InvariantValue::new(
        "j",
        j.numerator.scale_by(&j_scale().recip()),
        j.denominator,
    );
    report.require(
        ClosedForm::BoldJ.eval(&s, &t).same_as(&scaled) == Some(true),
        "symbolic",
        "bold j differs from j / (5 (1440000*10!)^2)",
    );
    report.note("bold j = j / (5 (1440000*10!)^2) as rational functions in s, t");

    let fit_pts = cal.fit_points.clone();
    let held_pts = cal.held_out.clone();
    let eval = |pts: &[Point]| -> Result<Vec<(Point, [BigRational; 6])>> {
        pts.par_iter()
            .map(|p| Ok((p.clone(), pipeline_values(p, &cal.calibration)?)))
            .collect()
    };
    let fit = eval(&fit_pts)?;
    let held = eval(&held_pts)?;
    report.samples = fit.len() + held.len();
    for (p, v) in fit.iter().chain(&held) {
        report.require(
            v[3] == &v[0] / j_scale(),
            show(p),
            "bold j != j / (5 (1440000*10!)^2)",
        );
    }

    let k_fit = fit_and_validate(
        &mut report,
        "bold k",
        vec!["k", "c1", "c2", "c3", "c4", "c5"],
        |v| {
            let (j, k, l) = (&v[0], &v[1], &v[2]);
            vec![k.clone(), l.clone(), j * l, j * j * j, j * j, j.clone()]
        },
        4,
        &fit,
        &held,
    );
    let l_fit = fit_and_validate(
        &mut report,
        "bold l",
        vec!["l", "c6", "c7"],
        |v| {
            let (j, l) = (&v[0], &v[2]);
            vec![l.clone(), j * j, j.clone()]
        },
        5,
        &fit,
        &held,
    );
    let lead_k = rat(1 << 20) * rat(729) * rat(3125);
    let lead_l = rat(-12) / (rat(25) * BigRational::from_integer(factorial(10)));
    for (fitted, lead, label) in [
        (k_fit, lead_k, "k in bold k"),
        (l_fit, lead_l, "l in bold l"),
    ] {
        if let Some(f) = fitted {
            report.require(
                f.x[0] == lead,
                "fit",
                format!("coefficient of {label} is {}, expected {lead}", f.x[0]),
            );
            for (n, x) in f.names.iter().zip(&f.x) {
                let name = if *n == "k" || *n == "l" {
                    format!("coeff_{n}")
                } else {
                    n.to_string()
                };
                report.constant(&name, x.clone());
            }
        }
    }
    Ok(report)
}
