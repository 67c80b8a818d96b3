//! Text syntax: `3/2*x_a_1_1^2*x_b_2_1 - 1`.
//!
//! A `*` belongs to a variable name when it is immediately followed by `_`,
//! so `x_a*_1_1` is one variable and `x*y` is a product.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MonomialOrder, Polynomial, Ring};
use crate::error::{ParseError, Result};
use crate::linalg::Rational;

pub(super) fn write_polynomial(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let abs = c.abs();
        let factors: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                let name = p.ring().name(v);
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{}", factors.join("*"))?;
        } else {
            write!(f, "{abs}*{}", factors.join("*"))?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str, line: usize) -> std::result::Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Token::Int(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() {
                let d = chars[i];
                let name_star = d == '*' && chars.get(i + 1) == Some(&'_');
                if d.is_alphanumeric() || d == '_' || d == '\'' || name_star {
                    i += 1;
                } else {
                    break;
                }
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), col));
        } else {
            let t = match c {
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '/' => Token::Slash,
                '^' => Token::Caret,
                _ => {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("unexpected character `{c}`"),
                    ))
                }
            };
            out.push((t, col));
            i += 1;
        }
    }
    Ok(out)
}

/// A parsed term before variable names are resolved: coefficient and `(name, exponent, column)`.
type RawTerm = (Rational, Vec<(String, u32, usize)>);

fn parse_raw(text: &str, line: usize) -> std::result::Result<Vec<RawTerm>, ParseError> {
    let toks = tokenize(text, line)?;
    let end_col = text.chars().count() + 1;
    let mut pos = 0;
    let col_at = |pos: usize| toks.get(pos).map_or(end_col, |t| t.1);
    let mut terms = Vec::new();
    if toks.is_empty() {
        return Err(ParseError::new(line, 1, "empty polynomial"));
    }
    loop {
        let mut sign = Rational::one();
        match toks.get(pos).map(|t| &t.0) {
            Some(Token::Plus) => pos += 1,
            Some(Token::Minus) => {
                sign = -sign;
                pos += 1;
            }
            _ if pos > 0 => {
                return Err(ParseError::new(line, col_at(pos), "expected `+` or `-`"));
            }
            _ => {}
        }
        let mut coef = sign;
        let mut factors = Vec::new();
        loop {
            match toks.get(pos).map(|t| &t.0) {
                Some(Token::Int(n)) => {
                    let num = n.clone();
                    pos += 1;
                    if toks.get(pos).map(|t| &t.0) == Some(&Token::Slash) {
                        pos += 1;
                        match toks.get(pos).map(|t| &t.0) {
                            Some(Token::Int(d)) if !d.is_zero() => {
                                coef *= Rational::new(num, d.clone());
                                pos += 1;
                            }
                            _ => {
                                return Err(ParseError::new(
                                    line,
                                    col_at(pos),
                                    "expected a nonzero denominator",
                                ))
                            }
                        }
                    } else {
                        coef *= Rational::from_integer(num);
                    }
                }
                Some(Token::Ident(name)) => {
                    let col = col_at(pos);
                    let name = name.clone();
                    pos += 1;
                    let mut e = 1u32;
                    if toks.get(pos).map(|t| &t.0) == Some(&Token::Caret) {
                        pos += 1;
                        match toks.get(pos).map(|t| &t.0) {
                            Some(Token::Int(n)) => {
                                e = n.try_into().map_err(|_| {
                                    ParseError::new(line, col_at(pos), "exponent too large")
                                })?;
                                pos += 1;
                            }
                            _ => {
                                return Err(ParseError::new(
                                    line,
                                    col_at(pos),
                                    "expected an exponent",
                                ))
                            }
                        }
                    }
                    factors.push((name, e, col));
                }
                _ => {
                    return Err(ParseError::new(
                        line,
                        col_at(pos),
                        "expected a number or variable",
                    ))
                }
            }
            if toks.get(pos).map(|t| &t.0) == Some(&Token::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        terms.push((coef, factors));
        if pos >= toks.len() {
            return Ok(terms);
        }
    }
}

fn resolve(
    ring: &Arc<Ring>,
    raw: Vec<RawTerm>,
    line: usize,
) -> std::result::Result<Polynomial, ParseError> {
    let mut terms = Vec::with_capacity(raw.len());
    for (c, factors) in raw {
        let mut m = vec![0u32; ring.nvars()];
        for (name, e, col) in factors {
            let i = ring
                .var_index(&name)
                .ok_or_else(|| ParseError::new(line, col, format!("unknown variable `{name}`")))?;
            m[i] += e;
        }
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parse one polynomial over a known ring.
pub fn parse_polynomial(
    ring: &Arc<Ring>,
    text: &str,
) -> std::result::Result<Polynomial, ParseError> {
    resolve(ring, parse_raw(text, 1)?, 1)
}

/// Parse a polynomial list, one per line, `#` comments allowed.
///
/// An optional first line `vars <name> <name> …` fixes the variable order;
/// otherwise variables are ordered by first appearance.
pub fn parse_polynomial_list(
    text: &str,
    order: MonomialOrder,
) -> Result<(Arc<Ring>, Vec<Polynomial>)> {
    let mut declared: Option<Vec<String>> = None;
    let mut raws = Vec::new();
    for (ln, raw_line) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some(rest) = content.trim_start().strip_prefix("vars") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                if declared.is_some() || !raws.is_empty() {
                    return Err(ParseError::new(line, 1, "`vars` must come first").into());
                }
                declared = Some(rest.split_whitespace().map(String::from).collect());
                continue;
            }
        }
        raws.push((line, parse_raw(content, line)?));
    }
    let names = match declared {
        Some(n) => n,
        None => {
            let mut seen = Vec::<String>::new();
            for (_, terms) in &raws {
                for (_, factors) in terms {
                    for (name, _, _) in factors {
                        if !seen.contains(name) {
                            seen.push(name.clone());
                        }
                    }
                }
            }
            seen
        }
    };
    let ring = Ring::new(names, order)?;
    let mut polys = Vec::new();
    for (line, raw) in raws {
        polys.push(resolve(&ring, raw, line)?);
    }
    Ok((ring, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    #[test]
    fn prints_canonical_form() {
        let r = ring(&["x_a_1_1", "x_b_2_1"]);
        let p = parse_polynomial(&r, "3/2*x_a_1_1^2*x_b_2_1 - 1").unwrap();
        assert_eq!(p.to_string(), "3/2*x_a_1_1^2*x_b_2_1 - 1");
        assert_eq!(p.terms()[0].1, ratio(3, 2));
        let q = parse_polynomial(&r, "-1 + x_b_2_1*2 - x_a_1_1").unwrap();
        assert_eq!(q.to_string(), "-x_a_1_1 + 2*x_b_2_1 - 1");
        assert_eq!(
            parse_polynomial(&r, "x_a_1_1 - x_a_1_1")
                .unwrap()
                .to_string(),
            "0"
        );
    }

    #[test]
    fn starred_variable_names() {
        let r = ring(&["x_a_1_1", "x_a*_1_1"]);
        let p = parse_polynomial(&r, "x_a*_1_1*x_a_1_1").unwrap();
        assert_eq!(p.to_string(), "x_a_1_1*x_a*_1_1");
        assert_eq!(p.terms()[0].0, vec![1, 1]);
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring(&["x"]);
        let e = parse_polynomial(&r, "x + y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_polynomial(&r, "x + ").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_polynomial(&r, "x $").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_polynomial(&r, "1/0").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
    }

    #[test]
    fn list_with_declared_and_implicit_variables() {
        let (r, ps) =
            parse_polynomial_list("# ideal\nvars x y z\nx*y - z\n\nz^2\n", MonomialOrder::Lex)
                .unwrap();
        assert_eq!(r.names(), ["x", "y", "z"]);
        assert_eq!(ps.len(), 2);
        let (r, _) = parse_polynomial_list("y^2 - x\nz\n", MonomialOrder::DegRevLex).unwrap();
        assert_eq!(r.names(), ["y", "x", "z"]);
        let err = parse_polynomial_list("x\nx +\n", MonomialOrder::Lex).unwrap_err();
        assert!(err.to_string().starts_with("line 2"));
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            terms in proptest::collection::vec(
                (-20i64..20, 1i64..6, proptest::collection::vec(0u32..4, 3)),
                0..6,
            )
        ) {
            let r = ring(&["x_a_1_1", "x_a*_2_1", "y"]);
            let p = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(n, d, m)| (m, ratio(n, d))).collect(),
            );
            let printed = p.to_string();
            let back = parse_polynomial(&r, &printed).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
