//! Recursive-descent parser for summands in `k` and `n`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' '-'? int)?
//! atom   := int | 'k' | 'n' | '(' expr ')'
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::birat::BiRat;
use crate::arith::{Rat, RatFn};
use crate::{Error, SyntaxError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    K,
    N,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax(SyntaxError { position, message: message.into() })
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(v), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let tok = match &text[start..i] {
                    "k" => Tok::K,
                    "n" => Tok::N,
                    other => return Err(syntax(start, format!("unknown variable '{other}'"))),
                };
                out.push((tok, start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(syntax(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiRat, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiRat, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = &acc * &rhs.recip()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BiRat, Error> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        let Tok::Int(e) = self.bump() else {
            return Err(syntax(at, "exponent must be an integer"));
        };
        let e: i64 = i64::try_from(&e).map_err(|_| syntax(at, "exponent too large"))?;
        base.pow(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<BiRat, Error> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(v) => Ok(BiRat::constant(RatFn::constant(Rat::from_integer(v)))),
            Tok::K => Ok(BiRat::k()),
            Tok::N => Ok(BiRat::n()),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    Tok::End => Err(syntax(close, "unbalanced parenthesis")),
                    _ => Err(syntax(close, "expected ')'")),
                }
            }
            Tok::End => Err(syntax(at, "unexpected end of input")),
            Tok::RParen => Err(syntax(at, "unbalanced parenthesis")),
            _ => Err(syntax(at, "expected a number, 'k', 'n' or '('")),
        }
    }
}

/// Parses a rational summand in `k` and `n` into normalized form.
pub fn parse(text: &str) -> Result<BiRat, Error> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        let at = p.offset();
        let msg = if *p.peek() == Tok::RParen { "unbalanced parenthesis" } else { "unexpected token" };
        return Err(syntax(at, msg.to_string()));
    }
    Ok(value)
}
