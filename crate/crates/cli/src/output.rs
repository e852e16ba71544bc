//! JSON encodings. Rationals are `"p/q"` strings (always with the
//! denominator), forms are arrays of such strings indexed by the exponent of
//! `z`. See `JSON_SCHEMA.md`.

use curvex_core::binform::BinaryForm;
use curvex_core::classical::InvariantValue;
use curvex_core::conjecture::{EvidenceReport, Status};
use curvex_core::equiv::{scientific, Comparison, EquivalenceVerdict, Interval, Mode, Value};
use num_rational::BigRational;
use serde_json::{json, Value as Json};

pub fn rational(r: &BigRational) -> Json {
    Json::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn form(f: &BinaryForm) -> Json {
    Json::Array(f.coeffs().iter().map(rational).collect())
}

pub fn invariant(v: &InvariantValue) -> Json {
    json!({
        "name": v.name,
        "value": v.value().as_ref().map_or(Json::Null, rational),
        "numerator": rational(&v.numerator),
        "denominator": rational(&v.denominator),
    })
}

fn interval(i: &Interval) -> Json {
    json!({ "lo": rational(i.lo()), "hi": rational(i.hi()) })
}

fn value(v: &Value) -> Json {
    match v {
        Value::Exact(x) => json!({ "kind": "exact", "value": rational(x) }),
        Value::Numeric(n) => json!({
            "kind": "numeric",
            "decimal": n.to_decimal(),
            "re": interval(&n.value.re),
            "im": interval(&n.value.im),
            "error_bound": rational(&n.error_bound()),
            "error_bound_sci": scientific(&n.error_bound(), 3),
            "digits": n.digits,
        }),
    }
}

fn comparison(c: &Comparison) -> Json {
    json!({
        "name": c.name,
        "left": value(&c.left),
        "right": value(&c.right),
        "equal": c.equal,
        "gap": c.gap().as_ref().map_or(Json::Null, rational),
    })
}

pub fn verdict(v: &EquivalenceVerdict) -> Json {
    json!({
        "equivalent": v.equivalent,
        "mode": match v.mode { Mode::Exact => "exact", Mode::Numeric => "numeric" },
        "precision": v.precision,
        "tolerance": v.tolerance.as_ref().map_or(Json::Null, rational),
        "witness": v.witness.iter().map(comparison).collect::<Vec<_>>(),
    })
}

pub fn report(r: &EvidenceReport) -> Json {
    json!({
        "check": r.check,
        "status": match r.status { Status::Verified => "verified", Status::Failed => "failed" },
        "samples": r.samples,
        "details": r.details,
        "constants": r.constants.iter().map(|(n, v)| json!({ "name": n, "value": rational(v) })).collect::<Vec<_>>(),
        "counterexample": r.counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvex_core::ratpoly::{frac, rat};

    #[test]
    fn rationals_carry_denominators() {
        assert_eq!(rational(&rat(3)), json!("3/1"));
        assert_eq!(rational(&frac(-6, 4)), json!("-3/2"));
        let f = BinaryForm::new(vec![rat(1), rat(0), frac(1, 2)]).unwrap();
        assert_eq!(form(&f), json!(["1/1", "0/1", "1/2"]));
    }
}
