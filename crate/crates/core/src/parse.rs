//! Polynomial expression parser for the CLI surface.
//!
//! Grammar: rational literals (`p/q` or integer), variables `x1..xn` (aliases
//! `x,y,z` when n <= 3), unary minus, `+`, `-`, `*`, `^` with nonnegative
//! integer exponents, and parentheses. Precedence `^` > unary minus > `*` >
//! binary `+`/`-`; `^` is right-associative. Implicit multiplication is not
//! allowed. Parsing lowers directly to the canonical sparse polynomial, so
//! parse ∘ print is the identity on canonical output.

use num::bigint::BigInt;
use num::{Signed, ToPrimitive, Zero};

use crate::error::ParseError;
use crate::poly::Polynomial;
use crate::rational::Rational;

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

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let advance = |chars: &mut std::iter::Peekable<std::str::Chars>,
                           line: &mut usize,
                           col: &mut usize| {
            let c = chars.next().unwrap();
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(advance(&mut chars, &mut line, &mut col));
                } else {
                    break;
                }
            }
            let value: BigInt = digits.parse().expect("digit string");
            tokens.push(Token {
                tok: Tok::Num(value),
                line: tl,
                col: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() {
                    name.push(advance(&mut chars, &mut line, &mut col));
                } else {
                    break;
                }
            }
            tokens.push(Token {
                tok: Tok::Ident(name),
                line: tl,
                col: tc,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(tl, tc, format!("unexpected character '{other}'"))),
        };
        advance(&mut chars, &mut line, &mut col);
        tokens.push(Token { tok, line: tl, col: tc });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    dim: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_err(&self, what: &str) -> ParseError {
        err(self.end_line, self.end_col, format!("unexpected end of input, expected {what}"))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(t) = self.peek() {
            if t.tok == Tok::Minus {
                self.next();
                return Ok(self.unary()?.neg());
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Caret {
                self.next();
                let at = self.peek().map(|t| (t.line, t.col));
                let exponent = self.exponent()?;
                let (line, col) = at.unwrap_or((self.end_line, self.end_col));
                if exponent.is_negative() {
                    return Err(err(line, col, "negative exponent is not a polynomial"));
                }
                let e = exponent
                    .to_u32()
                    .ok_or_else(|| err(line, col, "exponent too large"))?;
                return Ok(poly_pow(&base, e));
            }
        }
        Ok(base)
    }

    // Exponents are integer expressions: an optionally negated integer or
    // parenthesized exponent, with right-associative `^`.
    fn exponent(&mut self) -> Result<BigInt, ParseError> {
        let base = self.exponent_atom()?;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Caret {
                let (line, col) = (t.line, t.col);
                self.next();
                let e = self.exponent()?;
                if e.is_negative() {
                    return Err(err(line, col, "negative exponent is not a polynomial"));
                }
                let e = e
                    .to_u32()
                    .ok_or_else(|| err(line, col, "exponent too large"))?;
                return Ok(num::pow::pow(base, e as usize));
            }
        }
        Ok(base)
    }

    fn exponent_atom(&mut self) -> Result<BigInt, ParseError> {
        let t = self.next().ok_or_else(|| self.eof_err("an exponent"))?;
        match t.tok {
            Tok::Num(v) => {
                if let Some(peeked) = self.peek() {
                    if peeked.tok == Tok::Slash {
                        return Err(err(
                            peeked.line,
                            peeked.col,
                            "fractional exponent is not a polynomial",
                        ));
                    }
                }
                Ok(v)
            }
            Tok::Minus => Ok(-self.exponent_atom()?),
            Tok::LParen => {
                let v = self.exponent()?;
                let t = self.next().ok_or_else(|| self.eof_err("')'"))?;
                if t.tok != Tok::RParen {
                    return Err(err(t.line, t.col, "expected ')'"));
                }
                Ok(v)
            }
            _ => Err(err(t.line, t.col, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.next().ok_or_else(|| self.eof_err("an operand"))?;
        match t.tok {
            Tok::Num(numerator) => {
                // Rational literal: integer or p/q.
                if let Some(peeked) = self.peek() {
                    if peeked.tok == Tok::Slash {
                        self.next();
                        let d = self.next().ok_or_else(|| self.eof_err("a denominator"))?;
                        match d.tok {
                            Tok::Num(denominator) => {
                                if denominator.is_zero() {
                                    return Err(err(d.line, d.col, "zero denominator"));
                                }
                                return Ok(Polynomial::constant(
                                    self.dim,
                                    Rational::new(numerator, denominator),
                                ));
                            }
                            _ => {
                                return Err(err(
                                    d.line,
                                    d.col,
                                    "'/' is only valid inside a rational literal p/q",
                                ))
                            }
                        }
                    }
                }
                Ok(Polynomial::constant(self.dim, Rational::from(numerator)))
            }
            Tok::Ident(name) => self.resolve_variable(&name, t.line, t.col),
            Tok::LParen => {
                let inner = self.expr()?;
                let t = self.next().ok_or_else(|| self.eof_err("')'"))?;
                if t.tok != Tok::RParen {
                    return Err(err(t.line, t.col, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::Minus => Ok(self.unary()?.neg()),
            _ => Err(err(t.line, t.col, "expected a number, variable, or '('")),
        }
    }

    fn resolve_variable(
        &self,
        name: &str,
        line: usize,
        col: usize,
    ) -> Result<Polynomial, ParseError> {
        let index = if let Some(digits) = name.strip_prefix('x') {
            if digits.is_empty() {
                if self.dim <= 3 {
                    Some(1)
                } else {
                    None
                }
            } else {
                digits.parse::<usize>().ok()
            }
        } else if self.dim <= 3 && name == "y" {
            Some(2)
        } else if self.dim <= 3 && name == "z" {
            Some(3)
        } else {
            None
        };
        let Some(index) = index else {
            return Err(err(line, col, format!("unknown variable '{name}'")));
        };
        if index == 0 || index > self.dim {
            return Err(err(
                line,
                col,
                format!("variable index {index} out of range for dimension {}", self.dim),
            ));
        }
        Ok(Polynomial::variable(self.dim, index - 1))
    }
}

fn poly_pow(base: &Polynomial, e: u32) -> Polynomial {
    let mut out = Polynomial::one(base.dim());
    for _ in 0..e {
        out = &out * base;
    }
    out
}

/// Parse `src` as a polynomial in dimension `n`, lowering to canonical form.
pub fn parse_polynomial(src: &str, n: usize) -> Result<Polynomial, ParseError> {
    assert!(n >= 2, "dimension must be at least 2");
    let tokens = tokenize(src)?;
    let lines: Vec<&str> = src.split('\n').collect();
    let end_line = lines.len().max(1);
    let end_col = lines.last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut parser = Parser {
        tokens,
        pos: 0,
        dim: n,
        end_line,
        end_col,
    };
    if parser.peek().is_none() {
        return Err(parser.eof_err("an expression"));
    }
    let p = parser.expr()?;
    if let Some(t) = parser.peek() {
        let what = match &t.tok {
            Tok::Ident(_) | Tok::Num(_) | Tok::LParen => {
                "unexpected operand; implicit multiplication is not allowed"
            }
            _ => "unexpected token",
        };
        return Err(err(t.line, t.col, what));
    }
    Ok(p)
}
