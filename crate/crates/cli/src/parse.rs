use std::collections::BTreeMap;

use curvex_core::binform::BinaryForm;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("inhomogeneous form: term {term:?} has degree {found}, expected {expected}")]
    Inhomogeneous {
        term: String,
        found: u32,
        expected: u32,
    },
    #[error("unbound parameter {0:?} (bind it with --param {0}=VALUE)")]
    Unbound(String),
    #[error("bad --param {0:?}: expected name=rational")]
    BadBinding(String),
}

/// A parsed form together with its source and the parameter values it used.
#[derive(Clone, Debug, PartialEq)]
pub struct FormExpression {
    pub source: String,
    pub form: BinaryForm,
    pub params: BTreeMap<String, BigRational>,
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (BigInt, BigInt) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
        None => s.parse().ok().map(BigRational::from_integer),
    }
}

/// `name=rational`.
pub fn parse_binding(s: &str) -> Result<(String, BigRational), ParseError> {
    let bad = || ParseError::BadBinding(s.to_string());
    let (name, value) = s.split_once('=').ok_or_else(bad)?;
    let name = name.trim();
    if name.is_empty()
        || name == "z"
        || name == "w"
        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        return Err(bad());
    }
    Ok((name.to_string(), parse_rational(value).ok_or_else(bad)?))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Term {
    text: String,
    coeff: BigRational,
    z: u32,
    w: u32,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    params: &'a BTreeMap<String, BigRational>,
    used: BTreeMap<String, BigRational>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.offset();
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| ParseError::Syntax {
            pos: at,
            msg: "exponent too large".into(),
        })
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let start = self.offset();
        let mut coeff = BigRational::one();
        let (mut z, mut w) = (0u32, 0u32);
        let mut need_factor = true;
        if let Some(Tok::Int(_)) = self.peek() {
            let p = self.nat()?;
            let mut c = BigRational::from_integer(p);
            if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                let at = self.offset();
                let q = self.nat()?;
                if q.is_zero() {
                    return Err(ParseError::Syntax {
                        pos: at,
                        msg: "zero denominator".into(),
                    });
                }
                c /= BigRational::from_integer(q);
            }
            coeff = c;
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                need_factor = false;
            }
        }
        while need_factor {
            match self.peek().cloned() {
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    match name.as_str() {
                        "z" => z += e,
                        "w" => w += e,
                        _ => {
                            let v = self
                                .params
                                .get(&name)
                                .ok_or_else(|| ParseError::Unbound(name.clone()))?;
                            self.used.insert(name.clone(), v.clone());
                            coeff *= num_traits::pow(v.clone(), e as usize);
                        }
                    }
                }
                _ => return self.err("expected z, w or a parameter"),
            }
            need_factor = self.peek() == Some(&Tok::Star);
            if need_factor {
                self.pos += 1;
            }
        }
        if negative {
            coeff = -coeff;
        }
        let end = self.offset();
        Ok(Term {
            text: self.src[start..end].trim().to_string(),
            coeff,
            z,
            w,
        })
    }
}

/// Parses `term (('+'|'-') term)*` with parameters substituted from `params`.
pub fn parse_form(
    src: &str,
    params: &BTreeMap<String, BigRational>,
) -> Result<FormExpression, ParseError> {
    let mut p = Parser {
        src,
        toks: tokenize(src)?,
        pos: 0,
        params,
        used: BTreeMap::new(),
    };
    if p.toks.is_empty() {
        return p.err("empty form");
    }
    let mut terms = Vec::new();
    let mut negative = false;
    if p.peek() == Some(&Tok::Minus) {
        p.pos += 1;
        negative = true;
    }
    loop {
        terms.push(p.term(negative)?);
        match p.peek() {
            None => break,
            Some(Tok::Plus) => negative = false,
            Some(Tok::Minus) => negative = true,
            Some(_) => return p.err("expected '+' or '-'"),
        }
        p.pos += 1;
    }
    let degree = terms[0].z + terms[0].w;
    let mut coeffs = vec![BigRational::zero(); degree as usize + 1];
    for t in &terms {
        let d = t.z + t.w;
        if d != degree {
            return Err(ParseError::Inhomogeneous {
                term: t.text.clone(),
                found: d,
                expected: degree,
            });
        }
        coeffs[t.z as usize] += &t.coeff;
    }
    Ok(FormExpression {
        source: src.to_string(),
        form: BinaryForm::new(coeffs).expect("nonempty coefficient list"),
        params: p.used,
    })
}

fn monomial(z: usize, w: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [part("z", z), part("w", w)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

/// Prints in the input grammar, highest power of `z` first. The zero form of
/// degree `n` prints as `0*z^n`.
pub fn print_form(f: &BinaryForm) -> String {
    let n = f.degree();
    let mut out = String::new();
    for i in (0..=n).rev() {
        let c = f.c(i);
        if c.is_zero() {
            continue;
        }
        let m = monomial(i, n - i);
        let a = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match (a.is_one(), m.is_empty()) {
            (true, false) => out.push_str(&m),
            (_, true) => out.push_str(&a.to_string()),
            (false, false) => out.push_str(&format!("{a}*{m}")),
        }
    }
    if out.is_empty() {
        out = if n == 0 {
            "0".into()
        } else {
            format!("0*{}", monomial(n, 0))
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvex_core::classical::f_st;
    use curvex_core::ratpoly::{frac, rat};

    fn parse(s: &str) -> Result<BinaryForm, ParseError> {
        parse_form(s, &BTreeMap::new()).map(|f| f.form)
    }

    #[test]
    fn examples() {
        let f = parse("z^5 + 2*z^4*w + w^5").unwrap();
        assert_eq!(
            f.coeffs(),
            &[rat(1), rat(0), rat(0), rat(0), rat(2), rat(1)]
        );
        let params: BTreeMap<_, _> = [("s".to_string(), rat(1)), ("t".to_string(), rat(2))].into();
        let e = parse_form("z^5 + s*z^4*w + t*z^3*w^2 + w^5", &params).unwrap();
        assert_eq!(e.form, f_st(rat(1), rat(2)));
        assert_eq!(e.params.len(), 2);
        assert!(matches!(
            parse("z^2 + w^3"),
            Err(ParseError::Inhomogeneous {
                found: 3,
                expected: 2,
                ..
            })
        ));
    }

    #[test]
    fn coefficients_and_signs() {
        let f = parse("-3/2*z^2 - z*w + 4*w*w").unwrap();
        assert_eq!(f.coeffs(), &[rat(4), rat(-1), frac(-3, 2)]);
        assert_eq!(print_form(&f), "-3/2*z^2 - z*w + 4*w^2");
        assert_eq!(
            parse("2 z").unwrap_err(),
            ParseError::Syntax {
                pos: 2,
                msg: "expected '+' or '-'".into()
            }
        );
        assert!(matches!(parse("z^4 + t*w^4"), Err(ParseError::Unbound(n)) if n == "t"));
        assert!(matches!(
            parse("z^2 + 1/0*w^2"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(parse("z +"), Err(ParseError::Syntax { .. })));
        assert!(parse_binding("t=-3/4").is_ok());
        assert!(parse_binding("z=1").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for s in [
            "z^4 + w^4",
            "-z^3*w + 7/3*w^4",
            "z^5 - 5*z*w^4 + w^5",
            "0*z^3",
            "2*z",
        ] {
            let f = parse(s).unwrap();
            assert_eq!(parse(&print_form(&f)).unwrap(), f, "{s}");
        }
    }
}
