//! Golden-file tests for the `curvex` binary. Set `UPDATE_GOLDEN=1` to
//! rewrite the expected files.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    code: i32,
}

const CASES: &[Case] = &[
    Case {
        name: "discriminant_fermat",
        args: &["discriminant", "z^5 + w^5"],
        code: 0,
    },
    Case {
        name: "invariants_fst",
        args: &[
            "invariants",
            "z^5 + s*z^4*w + t*z^3*w^2 + w^5",
            "--param",
            "s=1",
            "--param",
            "t=2",
        ],
        code: 0,
    },
    Case {
        name: "invariants_quartic_json",
        args: &["--json", "invariants", "z^4 + 3*z^2*w^2 + w^4"],
        code: 0,
    },
    Case {
        name: "resultant",
        args: &["resultant", "z^2 - w^2", "z*w"],
        code: 0,
    },
    Case {
        name: "transvect",
        args: &["transvect", "z^3 + w^3", "z^3 + w^3", "--order", "2"],
        code: 0,
    },
    Case {
        name: "hessian_json",
        args: &[
            "hessian",
            "z^4 + t*z^2*w^2 + w^4",
            "--param",
            "t=1",
            "--json",
        ],
        code: 0,
    },
    Case {
        name: "milnor_quartic",
        args: &["milnor", "z^4 + w^4"],
        code: 0,
    },
    Case {
        name: "associated_q3",
        args: &["associated-form", "z^4 + 3*z^2*w^2 + w^4"],
        code: 0,
    },
    Case {
        name: "equivalent_quintics",
        args: &["equivalent", "z^5 + z*w^4 + w^5", "z^5 - z*w^4 + w^5"],
        code: 0,
    },
    Case {
        name: "family_st_showcase",
        args: &[
            "family-equiv",
            "--family",
            "st",
            "--p1",
            "5,10",
            "--p2",
            "15*5^(-4/5),10*5^(-3/5)",
            "--digits",
            "60",
        ],
        code: 0,
    },
    Case {
        name: "family_t_json",
        args: &[
            "--json",
            "family-equiv",
            "--family",
            "t",
            "--n",
            "6",
            "--p1",
            "1",
            "--p2",
            "-1",
        ],
        code: 0,
    },
    Case {
        name: "conjecture_duality_json",
        args: &["conjecture", "--suite", "duality", "--json"],
        code: 0,
    },
    // usage errors
    Case {
        name: "inhomogeneous",
        args: &["discriminant", "z^2 + w^3"],
        code: 1,
    },
    Case {
        name: "unbound_param",
        args: &["discriminant", "z^2 + t*w^2"],
        code: 1,
    },
    Case {
        name: "syntax",
        args: &["hessian", "z^2 + + w^2"],
        code: 1,
    },
    Case {
        name: "unknown_suite",
        args: &["conjecture", "--suite", "nope"],
        code: 1,
    },
    Case {
        name: "unknown_command",
        args: &["frobnicate"],
        code: 1,
    },
    // domain errors
    Case {
        name: "milnor_not_square_free",
        args: &["milnor", "z^3*w"],
        code: 2,
    },
    Case {
        name: "equivalent_wrong_degree",
        args: &["equivalent", "z^3 + w^3", "z^3 - w^3"],
        code: 2,
    },
    Case {
        name: "quintic_not_square_free",
        args: &[
            "--json",
            "equivalent",
            "z^5 + 2*z^4*w + z^3*w^2",
            "z^5 + w^5",
        ],
        code: 2,
    },
    Case {
        name: "family_inadmissible",
        args: &[
            "family-equiv",
            "--family",
            "t",
            "--p1",
            "-(3125/256)^(1/5)",
            "--p2",
            "1",
            "--digits",
            "30",
        ],
        code: 2,
    },
];

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_curvex"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn golden_outputs_and_exit_codes() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for case in CASES {
        let (code, stdout, stderr) = run(case.args);
        assert_eq!(code, case.code, "{}: stderr {stderr}", case.name);
        let got = if case.code == 0 { stdout } else { stderr };
        let path = golden(case.name);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want =
            std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(got, want, "{}", case.name);
    }
}

/// Rationals are "p/q" strings and no floating-point number appears.
fn check_exact(v: &Value, key: &str) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "float at {key}"),
        Value::Array(a) => a.iter().for_each(|x| check_exact(x, key)),
        Value::Object(m) => m.iter().for_each(|(k, x)| check_exact(x, k)),
        Value::String(s)
            if [
                "value",
                "gap",
                "tolerance",
                "numerator",
                "denominator",
                "lo",
                "hi",
                "error_bound",
            ]
            .contains(&key) =>
        {
            let (p, q) = s
                .split_once('/')
                .unwrap_or_else(|| panic!("{key}: {s} is not p/q"));
            assert!(
                p.trim_start_matches('-')
                    .chars()
                    .all(|c| c.is_ascii_digit()),
                "{s}"
            );
            assert!(q.chars().all(|c| c.is_ascii_digit()) && q != "0", "{s}");
        }
        _ => {}
    }
}

#[test]
fn json_follows_the_schema() {
    for case in CASES
        .iter()
        .filter(|c| c.code == 0 && c.args.contains(&"--json"))
    {
        let (_, stdout, _) = run(case.args);
        let v: Value = serde_json::from_str(&stdout).unwrap();
        check_exact(&v, "");
    }
    let (_, out, _) = run(&["--json", "hessian", "z^4 + w^4"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 4);
    let coeffs: Vec<&str> = v["hessian"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0/1", "0/1", "144/1", "0/1", "0/1"]);
    let (code, _, err) = run(&["--json", "milnor", "z^2*w^2"]);
    assert_eq!(code, 2);
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"]["exit_code"], 2);
    assert_eq!(e["error"]["kind"], "domain");
}

#[test]
fn printed_forms_parse_back() {
    let (_, out, _) = run(&["hessian", "2*z^5 - 3/2*z^2*w^3 + w^5"]);
    let (code, again, _) = run(&["hessian", out.trim()]);
    assert_eq!(code, 0);
    assert!(!again.is_empty());
    let (_, disc, _) = run(&["discriminant", "z^5 + w^5"]);
    assert_eq!(disc, "1\n");
}
