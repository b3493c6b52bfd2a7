//! Text form of algebra elements.
//!
//! Grammar (usual precedence, `*` optional between factors):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'|'/'] factor)*
//! factor := '-' factor | atom ['^' ['-'] INT]
//! atom   := INT | NAME | '(' expr ')'
//! ```
//!
//! Names are `x1..xn` for the generators (the last one may also be written
//! `t`), `q1..qr` for the parameters and `z` for the root of unity.

use num_bigint::BigInt;

use super::{AlgebraElement, Context};
use crate::error::{Error, Result};
use crate::scalars::{FieldMode, Scalar};

pub fn generator_name(n: usize, i: usize) -> String {
    if i + 1 == n {
        "t".to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn monomial_text(a: &[i64]) -> String {
    let n = a.len();
    let mut parts = Vec::new();
    for (i, &k) in a.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(generator_name(n, i)),
            _ => parts.push(format!("{}^{}", generator_name(n, i), k)),
        }
    }
    parts.join("*")
}

/// Terms in lexicographic order of exponents, joined by ` + ` / ` - `.
pub fn render(el: &AlgebraElement) -> String {
    if el.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (a, c)) in el.terms().iter().enumerate() {
        let mono = monomial_text(a);
        let term = if mono.is_empty() {
            c.render()
        } else if c.is_one() {
            mono
        } else if c.neg().is_one() {
            format!("-{mono}")
        } else {
            format!("{}*{}", c.render(), mono)
        };
        if idx == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '/' => out.push((Tok::Slash, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                out.push((Tok::Int(lit.parse().unwrap()), start));
                continue;
            }
            l if l.is_ascii_alphabetic() => {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push((Tok::Name(name, start), start));
                continue;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character '{other}' at position {start}"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a Context,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(usize::MAX)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        if self.pos >= self.toks.len() {
            Err(Error::Parse(format!("{msg} at end of input")))
        } else {
            Err(Error::Parse(format!("{msg} at position {}", self.at())))
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Name(..)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.at();
                    let d = self.factor()?;
                    let inv = d.inverse().map_err(|_| {
                        Error::Parse(format!(
                            "divisor at position {at} is not invertible: {}",
                            d.render()
                        ))
                    })?;
                    acc = acc.mul(&inv);
                }
                _ if self.starts_factor() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Minus) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let Some(Tok::Int(k)) = self.peek().cloned() else {
                return self.err("expected integer exponent");
            };
            self.pos += 1;
            let k: i64 = i64::try_from(k).map_err(|_| Error::Parse("exponent too large".into()))?;
            let k = if neg { -k } else { k };
            return base.pow(k).map_err(|_| {
                Error::Parse(format!(
                    "negative power of non-invertible {}",
                    base.render()
                ))
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(AlgebraElement::scalar(
                    self.ctx,
                    Scalar::from_integer_big(v),
                ))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Name(name, at)) => {
                self.pos += 1;
                self.name(&name, at)
            }
            _ => self.err("expected a number, name or '('"),
        }
    }

    fn name(&self, name: &str, at: usize) -> Result<AlgebraElement> {
        let n = self.ctx.n();
        let mode = self.ctx.mode();
        let index = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix)
                .filter(|d| !d.is_empty() && !d.starts_with('0'))
                .and_then(|d| d.parse::<usize>().ok())
        };
        if name == "t" {
            return Ok(AlgebraElement::generator(self.ctx, n - 1, 1));
        }
        if let Some(i) = index("x") {
            if (1..=n).contains(&i) {
                return Ok(AlgebraElement::generator(self.ctx, i - 1, 1));
            }
            return Err(Error::Parse(format!(
                "generator {name} at position {at} outside x1..x{n}"
            )));
        }
        match mode {
            FieldMode::Generic { r } => {
                if let Some(k) = index("q") {
                    if (1..=r).contains(&k) {
                        return Ok(AlgebraElement::scalar(self.ctx, mode.parameter(k)?));
                    }
                }
            }
            FieldMode::RootOfUnity { .. } => {
                if name == "z" {
                    return Ok(AlgebraElement::scalar(self.ctx, mode.parameter(1)?));
                }
            }
        }
        Err(Error::Parse(format!(
            "unknown name '{name}' at position {at}"
        )))
    }
}

pub fn parse(ctx: &Context, s: &str) -> Result<AlgebraElement> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ctx, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected token");
    }
    Ok(e)
}

/// Parses a scalar (an element supported at the origin).
pub fn parse_scalar(ctx: &Context, s: &str) -> Result<Scalar> {
    parse(ctx, s)?
        .as_scalar()
        .ok_or_else(|| Error::Parse(format!("'{s}' is not a scalar")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ExponentSystem;
    use std::sync::Arc;

    fn plane() -> Context {
        Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }))
    }

    #[test]
    fn parse_and_render() {
        let c = plane();
        let a = parse(&c, "t^2 - x1").unwrap();
        assert_eq!(a.render(), "t^2 - x1");
        assert_eq!(parse(&c, &a.render()).unwrap(), a);
        let b = parse(&c, "t x1").unwrap();
        // t x1 = q^{-1} x1 t
        assert_eq!(b.render(), "1/q1*x1*t");
        assert_eq!(parse(&c, &b.render()).unwrap(), b);
        let f = parse(&c, "(q1 + 1)/(q1 - 1)*x1^-2 - 3/2").unwrap();
        assert_eq!(parse(&c, &f.render()).unwrap(), f);
        assert_eq!(parse(&c, "x2").unwrap(), parse(&c, "t").unwrap());
    }

    #[test]
    fn root_mode_names() {
        let c = Arc::new(ExponentSystem::quantum_plane(FieldMode::RootOfUnity {
            m: 5,
        }));
        let a = parse(&c, "(z^2 + 1)*x1 - z*t^-1").unwrap();
        assert_eq!(parse(&c, &a.render()).unwrap(), a);
        assert!(parse(&c, "q1").is_err());
    }

    #[test]
    fn errors() {
        let c = plane();
        assert!(parse(&c, "x3").is_err());
        assert!(parse(&c, "(1 + x1)^-1").is_err());
        assert!(parse(&c, "1/(1 + t)").is_err());
        assert!(parse(&c, "1/0").is_err());
        assert!(parse(&c, "x1 +").is_err());
        assert!(parse(&c, "").is_err());
        assert!(parse(&c, "x1 $").is_err());
    }
}
