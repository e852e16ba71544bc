mod calibrate;
mod checks;
mod counter;
mod report;

pub use calibrate::{
    calibrate_sextics, check_connections, default_calibration, default_fit_grid,
    default_held_out_grid, Point,
};
pub use checks::{
    check_associated_fst, check_associated_ft, check_associated_qt, check_expressF,
    check_ft_associated, check_quartic_duality, ft_points, FST_SIDE, QT_POINTS,
};
pub use counter::{
    counterexample_suite, rational_grid, root_of_level, search_h_quadratic, search_h_rational,
    verify_h_pair, HtPair, SEARCH_BOUND,
};
pub use report::{CalibrationResult, EvidenceReport, Status};

use crate::error::{AlgebraError, Result};
use crate::ratpoly::rat;

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = [
    "all",
    "calibration",
    "connections",
    "duality",
    "associated",
    "ft",
    "expressF",
    "counterexamples",
];

/// Runs one named group of checks (or `"all"`) on the default samples.
pub fn run_suite(name: &str) -> Result<Vec<EvidenceReport>> {
    let one = |r: EvidenceReport| Ok(vec![r]);
    match name {
        "all" => {
            let mut out = Vec::new();
            for s in &SUITES[1..] {
                out.extend(run_suite(s)?);
            }
            Ok(out)
        }
        "calibration" => one(default_calibration()?.report()),
        "connections" => one(check_connections(default_calibration()?)?),
        "duality" => one(check_quartic_duality(&[
            rat(1),
            rat(3),
            rat(-1),
            rat(5),
            rat(7),
            crate::ratpoly::frac(1, 2),
        ])),
        "associated" => Ok(vec![
            check_associated_qt(),
            check_associated_fst(FST_SIDE),
            check_associated_ft(5),
            check_associated_ft(6),
            check_associated_ft(7),
        ]),
        "ft" => one(check_ft_associated(&[5, 6, 7])),
        "expressF" => one(check_expressF()),
        "counterexamples" => one(counterexample_suite()),
        _ => Err(AlgebraError::Domain(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests;
