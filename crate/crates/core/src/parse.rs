//! Polynomial expressions: integer and rational literals, the imaginary unit
//! `i`, declared variables, `+ - * / ^` with the usual precedence and
//! parentheses. `/` only divides by nonzero constants and `^` only takes
//! nonnegative integer literals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalars::{GaussianRational, Rational};

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    let Some(c) = d.constant_value() else {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division by a non-constant expression".into(),
                        });
                    };
                    if c.is_zero() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = acc.scale(&c.inv().unwrap());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return self.err("exponent must be a nonnegative integer literal");
        };
        let e: u32 = match u32::try_from(&n) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(format!("exponent exceeds {MAX_EXPONENT}")),
        };
        self.pos += 1;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(MultiPoly::constant(
                self.vars,
                GaussianRational::real(Rational::from_integer(n)),
            )),
            Tok::Ident(name) if self.vars.contains(&name.as_str()) => {
                Ok(MultiPoly::var(self.vars, &name))
            }
            Tok::Ident(name) if name == "i" => Ok(MultiPoly::constant(self.vars, GaussianRational::i())),
            Tok::Ident(name) => Err(Error::WrongVariable {
                name,
                expected: self.vars.join(", "),
                pos: at,
            }),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected token {other:?}"))
            }
        }
    }
}

/// Parses an expression over the declared variables. The result carries
/// exactly `vars` as its variable list.
pub fn parse_poly(src: &str, vars: &[&str]) -> Result<MultiPoly> {
    if vars.contains(&"i") {
        return Err(Error::InvalidArgument(
            "`i` denotes the imaginary unit and cannot be a variable".into(),
        ));
    }
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count(),
        vars,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

/// Parses a univariate expression in `var`.
pub fn parse_poly_expr(src: &str, var: &str) -> Result<MultiPoly> {
    parse_poly(src, &[var])
}

/// Parses a constant expression such as `1/2 - 3*i`.
pub fn parse_constant(src: &str) -> Result<GaussianRational> {
    let p = parse_poly(src, &[])?;
    Ok(p.constant_value().expect("no variables declared"))
}
