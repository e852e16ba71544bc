use super::*;
use crate::classical::{sextic_invariants, ClosedForm};
use crate::ratpoly::{frac, rat, BigRational};

fn big(s: &str) -> BigRational {
    s.parse().unwrap()
}

#[test]
fn calibration_constants_are_frozen() {
    let cal = default_calibration().unwrap();
    let c = &cal.calibration;
    assert_eq!(c.alpha, frac(1, 3));
    assert_eq!(c.beta, big("1/9674588160000"));
    let gamma = [
        big("8/405"),
        big("-37/1306069401600000"),
        big("7/701982420492091392000000000"),
        rat(0),
        rat(0),
        big("1/24260512452206678507520000000000"),
    ];
    assert_eq!(c.gamma, gamma);
    assert_eq!(cal.rank, 4);
    assert_eq!(cal.held_out.len(), 20);
    assert!(cal.residuals.iter().flatten().all(|r| *r == rat(0)));
}

#[test]
fn bold_j_at_one_one() {
    let cal = default_calibration().unwrap();
    let f = crate::classical::bold_f_st(rat(1), rat(1));
    let inv = sextic_invariants(&f, &cal.calibration).unwrap();
    assert_eq!(inv.j.value(), Some(frac(14884, 4112)));
    assert_eq!(
        ClosedForm::BoldJ.eval(&rat(1), &rat(1)).value(),
        Some(frac(14884, 4112))
    );
}

#[test]
fn calibration_preconditions() {
    let fit = default_fit_grid();
    assert!(calibrate_sextics(&fit[..10], &default_held_out_grid()).is_err());
    assert!(calibrate_sextics(&fit, &fit[..3]).is_err());
    // f_{1,-3} has a repeated factor
    let mut bad = fit.clone();
    bad[0] = (rat(1), rat(-3));
    assert!(calibrate_sextics(&bad, &default_held_out_grid()).is_err());
}

#[test]
fn connections() {
    let r = check_connections(default_calibration().unwrap()).unwrap();
    assert!(r.verified(), "{r}");
    let get = |n: &str| r.constants.iter().find(|(m, _)| m == n).unwrap().1.clone();
    assert_eq!(get("coeff_k"), rat(1 << 20) * rat(729) * rat(3125));
    assert_eq!(get("coeff_l"), frac(-12, 25) / rat(3_628_800));
}

#[test]
fn quartic_duality() {
    let r = check_quartic_duality(&[rat(1), rat(3), rat(2), frac(1, 2), rat(-6), rat(7)]);
    assert!(r.verified(), "{r}");
    assert_eq!(r.samples, 4);
    assert_eq!(
        r.details.iter().filter(|d| d.contains("skipped")).count(),
        2
    );
}

#[test]
fn associated_forms_of_the_families() {
    let r = check_associated_qt();
    assert!(r.verified(), "{r}");
    assert!(r.samples >= QT_POINTS);
    let r = check_associated_fst(5);
    assert!(r.verified(), "{r}");
}

#[test]
fn ft_evidence() {
    let r = check_ft_associated(&[6]);
    assert!(r.verified(), "{r}");
    assert!(r
        .constants
        .iter()
        .any(|(n, v)| n == "rho (n = 6)" && *v != rat(0)));
    // for odd n the transvectant is the displayed constant times -Delta(f_t)
    let r = check_ft_associated(&[5]);
    assert!(!r.verified());
    assert_eq!(r.counterexample.as_deref(), Some("n = 5: (b)"));
    let failures: Vec<_> = r
        .details
        .iter()
        .filter(|d| d.starts_with("FAILED"))
        .collect();
    assert_eq!(failures.len(), 1, "{r}");
    let ratio = r
        .constants
        .iter()
        .find(|(n, _)| n == "(b) ratio (n = 5)")
        .unwrap();
    assert_eq!(ratio.1, rat(-10_368_000));
    let r = check_ft_associated(&[3]);
    assert!(r.details.iter().any(|d| d.contains("skipped")));
}

#[test]
fn expression_for_f() {
    let r = check_expressF();
    assert!(r.verified(), "{r}");
}

#[test]
fn h_pair_on_level_sets() {
    let pair = search_h_quadratic(10).unwrap();
    assert_eq!((pair.v1.clone(), pair.v2.clone()), (frac(5, 4), rat(-10)));
    assert!(verify_h_pair(&pair));
    assert!(!pair.is_rational());
    assert_eq!(root_of_level(&rat(2)).unwrap().to_rational(), Some(rat(2)));
}

#[test]
fn grid_has_no_duplicates() {
    let g = rational_grid(6);
    let set: std::collections::BTreeSet<_> = g.iter().collect();
    assert_eq!(set.len(), g.len());
    assert!(g.contains(&rat(0)) && g.contains(&frac(-5, 6)));
}

#[test]
fn counterexample_triple() {
    let r = counterexample_suite();
    assert!(r.verified(), "{r}");
    assert!(
        r.details
            .iter()
            .any(|d| d.contains("rational search exhausted")),
        "{r}"
    );
    assert!(
        r.details.iter().any(|d| d.contains("v1 = 5/4, v2 = -10")),
        "{r}"
    );
}
