mod output;
mod parse;

use std::collections::BTreeMap;
use std::panic;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use curvex_core::binform::{discriminant, hessian, resultant, transvectant};
use curvex_core::classical::absolute_invariants;
use curvex_core::conjecture::{default_calibration, run_suite};
use curvex_core::equiv::{
    equivalent_quartics, equivalent_quintics, germ_equiv_family_st, germ_equiv_family_t, Expr,
};
use curvex_core::milnor::{associated_form, MilnorAlgebra};
use curvex_core::AlgebraError;
use num_rational::BigRational;
use serde_json::{json, Value as Json};

use parse::{parse_binding, parse_form, print_form, FormExpression};

/// Exact invariants, Milnor algebras and equivalence of binary forms.
///
/// Forms are written in `z` and `w`, e.g. "z^5 + s*z^4*w + w^5" with
/// `--param s=3/2`.
#[derive(Parser)]
#[command(name = "curvex", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Bind a parameter used in a form, NAME=RATIONAL. Repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE", global = true)]
    params: Vec<String>,
    /// Decimal digits for numeric comparisons.
    #[arg(long, default_value_t = 50, global = true)]
    digits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Absolute invariants of a form.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Discriminant of a form.
    Discriminant {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Resultant of two forms.
    Resultant {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Transvectant (p, q)^(order).
    Transvect {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, short)]
        order: usize,
    },
    /// Hessian covariant.
    Hessian {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Graded Milnor algebra of a square-free form.
    Milnor {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Associated form of a square-free form, in zeta1 = z, zeta2 = w.
    AssociatedForm {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Linear equivalence of two quartics or two quintics.
    Equivalent {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Equivalence within the families f_t or f_{s,t}.
    FamilyEquiv {
        #[arg(long, value_enum)]
        family: Family,
        /// Degree of f_t.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// First parameter: t, or s,t.
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        /// Second parameter: t, or s,t.
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
    },
    /// Evidence checks relating forms to their associated forms.
    Conjecture {
        /// all, calibration, connections, duality, associated, ft, expressF, counterexamples
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    T,
    St,
}

enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Domain(_) => "domain",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotDivisible => Failure::Internal(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Json,
}

struct Ctx {
    params: BTreeMap<String, BigRational>,
    digits: u32,
}

impl Ctx {
    fn form(&self, src: &str) -> Result<FormExpression, Failure> {
        Ok(parse_form(src, &self.params)?)
    }
}

fn expr(src: &str) -> Result<Expr, Failure> {
    Expr::parse(src.trim()).map_err(|e| Failure::Usage(format!("bad parameter {src:?}: {e}")))
}

/// Splits "a,b" at the top-level comma.
fn pair(src: &str) -> Result<(Expr, Expr), Failure> {
    let mut depth = 0i32;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((expr(&src[..i])?, expr(&src[i + 1..])?)),
            _ => {}
        }
    }
    Err(Failure::Usage(format!("expected s,t but got {src:?}")))
}

fn scalar(name: &str, v: &BigRational) -> Output {
    Output {
        text: v.to_string(),
        json: json!({ name: output::rational(v) }),
    }
}

fn covariant(name: &str, f: &curvex_core::binform::BinaryForm) -> Output {
    Output {
        text: print_form(f),
        json: json!({ name: output::form(f), "degree": f.degree() }),
    }
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Output, Failure> {
    let out = match cmd {
        Command::Invariants { form } => {
            let q = ctx.form(&form)?.form;
            let cal = if q.degree() == 6 {
                Some(&default_calibration()?.calibration)
            } else {
                None
            };
            let invs = absolute_invariants(&q, cal)?;
            let text = invs
                .iter()
                .map(|v| match v.value() {
                    Some(x) => format!("{} = {x}", v.name),
                    None => format!("{} undefined (denominator vanishes)", v.name),
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output {
                text,
                json: json!({
                    "form": output::form(&q),
                    "degree": q.degree(),
                    "invariants": invs.iter().map(output::invariant).collect::<Vec<_>>(),
                }),
            }
        }
        Command::Discriminant { form } => {
            scalar("discriminant", &discriminant(&ctx.form(&form)?.form)?)
        }
        Command::Resultant { p, q } => scalar(
            "resultant",
            &resultant(&ctx.form(&p)?.form, &ctx.form(&q)?.form)?,
        ),
        Command::Transvect { p, q, order } => covariant(
            "transvectant",
            &transvectant(&ctx.form(&p)?.form, &ctx.form(&q)?.form, order)?,
        ),
        Command::Hessian { form } => covariant("hessian", &hessian(&ctx.form(&form)?.form)?),
        Command::Milnor { form } => {
            let alg = MilnorAlgebra::build(&ctx.form(&form)?.form)?;
            let mono = |&(a, b): &(u32, u32)| {
                let f = curvex_core::binform::BinaryForm::monomial(
                    (a + b) as usize,
                    a as usize,
                    BigRational::from_integer(1.into()),
                );
                print_form(&f)
            };
            let basis: Vec<Vec<String>> = (0..=alg.nu())
                .map(|d| alg.basis(d).iter().map(mono).collect())
                .collect();
            let check = alg.annihilator_check();
            let hilbert = alg
                .hilbert()
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let mut text = format!(
                "dimension {}\nnu {}\nhilbert {hilbert}\nannihilator check {}\nbasis",
                alg.dimension(),
                alg.nu(),
                if check { "passed" } else { "failed" }
            );
            for (d, b) in basis.iter().enumerate() {
                text.push_str(&format!("\n  {d}: {}", b.join(", ")));
            }
            Output {
                text,
                json: json!({
                    "dimension": alg.dimension(),
                    "nu": alg.nu(),
                    "hilbert": alg.hilbert(),
                    "basis": basis,
                    "annihilator_check": check,
                }),
            }
        }
        Command::AssociatedForm { form } => covariant(
            "associated_form",
            &associated_form(&ctx.form(&form)?.form)?.form,
        ),
        Command::Equivalent { p, q } => {
            let (p, q) = (ctx.form(&p)?.form, ctx.form(&q)?.form);
            let v = match p.degree() {
                4 => equivalent_quartics(&p, &q)?,
                5 => equivalent_quintics(&p, &q)?,
                n => {
                    return Err(Failure::Domain(format!(
                        "equivalent handles quartics and quintics, got degree {n}"
                    )))
                }
            };
            Output {
                text: v.to_string().trim_end().to_string(),
                json: output::verdict(&v),
            }
        }
        Command::FamilyEquiv { family, n, p1, p2 } => {
            let v = match family {
                Family::T => germ_equiv_family_t(n, &expr(&p1)?, &expr(&p2)?, ctx.digits)?,
                Family::St => {
                    let (a, b) = (pair(&p1)?, pair(&p2)?);
                    germ_equiv_family_st((&a.0, &a.1), (&b.0, &b.1), ctx.digits)?
                }
            };
            Output {
                text: v.to_string().trim_end().to_string(),
                json: output::verdict(&v),
            }
        }
        Command::Conjecture { suite } => {
            let reports = run_suite(&suite).map_err(|e| match e {
                AlgebraError::Domain(m) if m.starts_with("unknown suite") => Failure::Usage(m),
                e => e.into(),
            })?;
            Output {
                text: reports
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<String>()
                    .trim_end()
                    .to_string(),
                json: json!({ "reports": reports.iter().map(output::report).collect::<Vec<_>>() }),
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json_mode = cli.json;
    let result = (|| {
        let mut params = BTreeMap::new();
        for b in &cli.params {
            let (k, v) = parse_binding(b)?;
            params.insert(k, v);
        }
        let ctx = Ctx {
            params,
            digits: cli.digits,
        };
        panic::set_hook(Box::new(|_| {}));
        panic::catch_unwind(panic::AssertUnwindSafe(|| run(cli.command, &ctx))).unwrap_or_else(
            |p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(Failure::Internal(msg))
            },
        )
    })();
    match result {
        Ok(out) => {
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if json_mode {
                let e = json!({ "error": { "kind": f.kind(), "message": f.message(), "exit_code": f.code() } });
                eprintln!("{e}");
            } else {
                eprintln!("curvex: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
