//! Text format for polynomials and rational maps.
//!
//! Grammar (whitespace insignificant, `*` always explicit):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' exponent)?
//! exponent := INTEGER ('^' exponent)? | '(' expr ')' ('^' exponent)?
//! atom     := INTEGER | IDENT | '(' expr ')'
//! map      := '(' expr ',' expr ',' expr ')'
//! ```
//!
//! `*` and `/` are left associative, so `3/4*x` is `(3/4)*x`; `^` is right
//! associative and binds tighter than unary minus (`-x^2` is `-(x^2)`).
//! Exponents must evaluate to nonnegative integer constants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::poly::{MultiPoly, Rat, RatFunc, RationalMap3};

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    BadExponent(String),
    ZeroDenominator,
    NotPolynomial,
    ComponentCount(usize),
    Empty,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "variable `{v}` is not allowed here"),
            ParseErrorKind::BadExponent(m) => write!(f, "invalid exponent: {m}"),
            ParseErrorKind::ZeroDenominator => write!(f, "division by the zero polynomial"),
            ParseErrorKind::NotPolynomial => {
                write!(f, "expected a polynomial, found a non-constant denominator")
            }
            ParseErrorKind::ComponentCount(n) => write!(f, "expected 3 components, found {n}"),
            ParseErrorKind::Empty => write!(f, "empty input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                line: tl,
                col: tc,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            if i < chars.len() && (chars[i] == '.' || chars[i].is_ascii_alphabetic()) {
                return Err(ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::Syntax(format!("unexpected `{}` after number", chars[i])),
                });
            }
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                line: tl,
                col: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
            continue;
        }
        return Err(ParseError {
            line,
            col,
            kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    allowed: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_at(t: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: t.line,
            col: t.col,
            kind,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<Token, ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(Self::err_at(
                &t,
                ParseErrorKind::Syntax(format!("expected {want}, found {}", t.tok)),
            ))
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let t = self.next();
                    let d = self.unary()?;
                    acc = acc
                        .checked_div(&d)
                        .map_err(|_| Self::err_at(&t, ParseErrorKind::ZeroDenominator))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let t = self.peek().clone();
        let value: Rat = match &t.tok {
            Tok::Int(n) => {
                self.next();
                Rat::from_integer(n.clone())
            }
            Tok::LParen => {
                self.next();
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                v.constant_value().ok_or_else(|| {
                    Self::err_at(
                        &t,
                        ParseErrorKind::BadExponent("exponent must be constant".into()),
                    )
                })?
            }
            Tok::Minus => {
                return Err(Self::err_at(
                    &t,
                    ParseErrorKind::BadExponent("negative exponent".into()),
                ));
            }
            other => {
                return Err(Self::err_at(
                    &t,
                    ParseErrorKind::Syntax(format!("expected exponent, found {other}")),
                ))
            }
        };
        if !value.is_integer() {
            return Err(Self::err_at(
                &t,
                ParseErrorKind::BadExponent(format!("{value} is not an integer")),
            ));
        }
        if value.is_negative() {
            return Err(Self::err_at(
                &t,
                ParseErrorKind::BadExponent("negative exponent".into()),
            ));
        }
        let mut e = value
            .to_integer()
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| {
                Self::err_at(&t, ParseErrorKind::BadExponent("exponent too large".into()))
            })?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let rest = self.exponent()?;
            e = (e as u64)
                .checked_pow(rest)
                .filter(|&v| v <= MAX_EXPONENT as u64)
                .ok_or_else(|| {
                    Self::err_at(&t, ParseErrorKind::BadExponent("exponent too large".into()))
                })? as u32;
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        let t = self.next();
        match t.tok {
            Tok::Int(ref n) => Ok(RatFunc::from_rat(Rat::from_integer(n.clone()))),
            Tok::Ident(ref name) => {
                if !self.allowed.contains(&name.as_str()) {
                    return Err(Self::err_at(
                        &t,
                        ParseErrorKind::UnknownVariable(name.clone()),
                    ));
                }
                Ok(RatFunc::var(name))
            }
            Tok::LParen => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            ref other => Err(Self::err_at(
                &t,
                ParseErrorKind::Syntax(format!("unexpected {other}")),
            )),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            Err(Self::err_at(
                &t,
                ParseErrorKind::Syntax(format!("unexpected {} after expression", t.tok)),
            ))
        }
    }
}

fn parser<'a>(text: &str, allowed: &'a [&'a str]) -> Result<Parser<'a>, ParseError> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::Empty,
        });
    }
    Ok(Parser {
        toks,
        pos: 0,
        allowed,
    })
}

/// Parse a rational expression over `allowed` variables.
pub fn parse_ratfunc(text: &str, allowed: &[&str]) -> Result<RatFunc, ParseError> {
    let mut p = parser(text, allowed)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parse a polynomial; division is allowed only by nonzero constants.
pub fn parse_poly(text: &str, allowed: &[&str]) -> Result<MultiPoly, ParseError> {
    let v = parse_ratfunc(text, allowed)?;
    v.as_poly().ok_or(ParseError {
        line: 1,
        col: 1,
        kind: ParseErrorKind::NotPolynomial,
    })
}

/// Parse `(e1, e2, e3)` with the given parameter names.
pub fn parse_map_in(text: &str, params: &[&str]) -> Result<RationalMap3, ParseError> {
    let mut p = parser(text, params)?;
    p.expect(Tok::LParen)?;
    let mut comps = vec![p.expr()?];
    loop {
        let t = p.next();
        match t.tok {
            Tok::Comma => comps.push(p.expr()?),
            Tok::RParen => break,
            ref other => {
                return Err(Parser::err_at(
                    &t,
                    ParseErrorKind::Syntax(format!("expected `,` or `)`, found {other}")),
                ))
            }
        }
    }
    p.finish()?;
    if comps.len() != 3 {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::ComponentCount(comps.len()),
        });
    }
    let [a, b, c]: [RatFunc; 3] = comps.try_into().expect("three components");
    Ok(RationalMap3::new(
        [a, b, c],
        params.iter().map(|s| s.to_string()).collect(),
    ))
}

/// Parse a map in the parameters `s, t`. The parameter list is `[s, t]` when
/// `s` occurs, otherwise `[t]` (a curve).
pub fn parse_map(text: &str) -> Result<RationalMap3, ParseError> {
    let m = parse_map_in(text, &["s", "t"])?;
    let uses_s = m
        .comps()
        .iter()
        .any(|c| c.used_vars().iter().any(|v| v == "s"));
    let params = if uses_s {
        vec!["s".to_string(), "t".to_string()]
    } else {
        vec!["t".to_string()]
    };
    Ok(m.with_params(params))
}

pub fn print_poly(p: &MultiPoly) -> String {
    p.to_string()
}

pub fn print_map(m: &RationalMap3) -> String {
    m.to_string()
}

/// A surface given either implicitly or by a rational map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceInput {
    Implicit(MultiPoly),
    Parametric(Box<RationalMap3>),
}

impl SurfaceInput {
    pub fn implicit(text: &str) -> Result<Self, ParseError> {
        Ok(SurfaceInput::Implicit(parse_poly(text, &["x", "y", "z"])?))
    }

    pub fn parametric(text: &str) -> Result<Self, ParseError> {
        Ok(SurfaceInput::Parametric(Box::new(parse_map(text)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    const XYZ: &[&str] = &["x", "y", "z"];

    #[test]
    fn parses_and_prints_example_polynomial() {
        let f = parse_poly("4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2", XYZ).unwrap();
        assert_eq!(print_poly(&f), "4*x^2 + 9*y^2 - z^2 - 4*x - 6*y + 2");
        assert_eq!(parse_poly(&print_poly(&f), XYZ).unwrap(), f);
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_poly("0", XYZ).unwrap().is_zero());
        assert_eq!(
            parse_poly("3/4*x", XYZ).unwrap(),
            MultiPoly::var("x").scale(&rat(3, 4))
        );
        assert_eq!(
            parse_poly("-x^2", XYZ).unwrap(),
            -MultiPoly::var("x").pow(2)
        );
        assert_eq!(parse_poly("2^3^2", XYZ).unwrap(), MultiPoly::from_int(512));
        assert_eq!(
            parse_poly("x^(1+1)", XYZ).unwrap(),
            MultiPoly::var("x").pow(2)
        );
    }

    #[test]
    fn exponent_errors() {
        let e = parse_poly("x^(1/2)", XYZ).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadExponent(_)));
        assert_eq!((e.line, e.col), (1, 3));
        assert!(matches!(
            parse_poly("x^-1", XYZ).unwrap_err().kind,
            ParseErrorKind::BadExponent(_)
        ));
        assert!(matches!(
            parse_poly("x^y", XYZ).unwrap_err().kind,
            ParseErrorKind::Syntax(_)
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_poly("x^2 +", XYZ).unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        let e = parse_poly("x +\n  2 y", XYZ).unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
        let e = parse_poly("2x", XYZ).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_poly("x + w", XYZ).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        assert_eq!(
            parse_poly("   ", XYZ).unwrap_err().kind,
            ParseErrorKind::Empty
        );
    }

    #[test]
    fn polynomial_rejects_variable_denominator() {
        assert_eq!(
            parse_poly("1/x", XYZ).unwrap_err().kind,
            ParseErrorKind::NotPolynomial
        );
    }

    #[test]
    fn parses_example_space_curve() {
        let m =
            parse_map("( (9+t^2)/(27+t^2), (t^2-6*t+27)/(3*t^2+81), (9+t^2)/(27+t^2) )").unwrap();
        assert_eq!(m.params(), &["t".to_string()]);
        let p = m.eval(&[("t", int(0))]).unwrap().unwrap();
        assert_eq!(p, [rat(1, 3), rat(1, 3), rat(1, 3)]);
        assert_eq!(parse_map(&print_map(&m)).unwrap(), m);
    }

    #[test]
    fn map_errors() {
        assert_eq!(
            parse_map("(1/(t-t), 0, 0)").unwrap_err().kind,
            ParseErrorKind::ZeroDenominator
        );
        assert_eq!(
            parse_map("(t, t)").unwrap_err().kind,
            ParseErrorKind::ComponentCount(2)
        );
        assert!(parse_map("t, t, t").is_err());
        let m = parse_map("(s, t, s*t)").unwrap();
        assert_eq!(m.params().len(), 2);
    }
}
