//! Small arithmetic expression parser shared by the polynomial reader and the
//! Chow-ring calculator.
//!
//! Grammar (ASCII, whitespace insignificant, no implicit multiplication):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | IDENT | IDENT '(' expr ')' | '(' expr ')'
//! ```
//!
//! `p/q` is only accepted as a literal; division is not an operator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("bad exponent at position {pos}: expected a nonnegative integer literal")]
    BadExponent { pos: usize },
    #[error("zero denominator in literal at position {pos}")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Ident { name: String, pos: usize },
    Call { name: String, arg: Box<Expr>, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
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
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(ExprError::Syntax {
                    pos: start,
                    msg: format!("unexpected character '{}'", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            let exp = match self.bump() {
                Some((Tok::Int(k), _)) => k,
                _ => return Err(ExprError::BadExponent { pos }),
            };
            if let Some(Tok::Slash) = self.peek() {
                return Err(ExprError::BadExponent { pos });
            }
            let exp: u32 = exp.try_into().map_err(|_| ExprError::BadExponent { pos })?;
            if let Some(Tok::Caret) = self.peek() {
                return self.syntax("chained '^' is ambiguous; use parentheses");
            }
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Some((Tok::Int(num), _)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let den_pos = self.pos();
                    let den = match self.bump() {
                        Some((Tok::Int(d), _)) => d,
                        _ => {
                            return Err(ExprError::Syntax {
                                pos: den_pos,
                                msg: "expected integer denominator".into(),
                            })
                        }
                    };
                    if den.is_zero() {
                        return Err(ExprError::ZeroDenominator { pos });
                    }
                    Ok(Expr::Num(BigRational::new(num, den)))
                } else {
                    Ok(Expr::Num(BigRational::from_integer(num)))
                }
            }
            Some((Tok::Ident(name), _)) => {
                if let Some(Tok::LParen) = self.peek() {
                    self.bump();
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Expr::Call { name, arg: Box::new(arg), pos })
                } else {
                    Ok(Expr::Ident { name, pos })
                }
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some(_) => Err(ExprError::Syntax { pos, msg: "expected a number, identifier or '('".into() }),
            None => Err(ExprError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        match self.peek() {
            Some(Tok::RParen) => {
                self.bump();
                Ok(())
            }
            _ => self.syntax("expected ')'"),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, idx: 0, end: text.len() };
    let e = p.expr()?;
    if p.idx < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(e)
}
