//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x`, `x y`) is rejected.

use super::field::add_mod;
use super::{Monomial, Polynomial, Ring, RingError};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, RingError> {
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
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(RingError::Syntax {
                    pos: start,
                    message: format!(
                        "unexpected character `{}`",
                        text[start..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn syntax(&self, message: impl Into<String>) -> RingError {
        RingError::Syntax {
            pos: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, RingError> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            let overflow = acc.raw_terms().iter().any(|(a, _)| {
                rhs.raw_terms()
                    .iter()
                    .any(|(b, _)| a.checked_mul(b).is_none())
            });
            if overflow {
                return Err(RingError::ExponentOverflow { pos: self.offset() });
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, RingError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, RingError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let Some(Token::Int(digits)) = self.peek().cloned() else {
                return Err(self.syntax("exponent must be a non-negative integer literal"));
            };
            self.pos += 1;
            let e: u32 = digits
                .parse()
                .map_err(|_| RingError::ExponentOverflow { pos: at })?;
            return base
                .checked_pow(u64::from(e))
                .ok_or(RingError::ExponentOverflow { pos: at });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, RingError> {
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.syntax("unexpected end of input"));
        };
        let p = self.ring.characteristic();
        let result = match tok {
            Token::Int(digits) => {
                let residue = digits.bytes().fold(0u32, |acc, d| {
                    add_mod(super::mul_mod(acc, 10 % p, p), u32::from(d - b'0') % p, p)
                });
                Polynomial::from_terms(self.ring, [(Monomial::one(self.ring.nvars()), residue)])
            }
            Token::Ident(name) => self.ring.var(&name)?,
            Token::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.syntax("expected `)`"));
                }
                inner
            }
            _ => return Err(self.syntax("expected a number, variable or `(`")),
        };
        self.pos += 1;
        Ok(result)
    }
}

pub(super) fn parse(ring: &Ring, text: &str) -> Result<Polynomial, RingError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.syntax("unexpected trailing input (juxtaposition is not allowed)"));
    }
    Ok(poly)
}
