//! Expressions over ℚ(p,q) in the generators `T, Tinv, L(n), C`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? nat)?
//! atom   := int | p | q | T | Tinv | C | L '(' int ')' | '(' expr ')'
//! ```
//!
//! Products are kept as written; nothing is normalized here. Division is
//! only by scalars, and negative exponents only apply to scalars and to
//! pure powers of `T`.

use num_bigint::BigInt;
use thiserror::Error;
use vpq_core::{AlgebraElement, Generator, RatFunc, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
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
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {n}"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
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
            _ => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

/// What a parsed subexpression is, for exponent checks.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Scalar,
    TPower,
    CLetter,
    Other,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column,
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            let col = self.column();
            self.err(
                col,
                format!("expected {}, found {}", describe(&t), describe(self.peek())),
            )
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.term()?.0;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?.0);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?.0);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<(AlgebraElement, Shape), ParseError> {
        let (mut acc, mut shape) = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let (y, s) = self.unary()?;
                    acc = acc.concat(&y);
                    shape = product_shape(shape, s);
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.column();
                    let (y, _) = self.unary()?;
                    let Some(d) = y.as_scalar() else {
                        return self.err(col, "division by a non-scalar");
                    };
                    let Ok(inv) = d.inv() else {
                        return self.err(col, "division by zero");
                    };
                    acc = acc.scale(&inv);
                }
                _ if self.starts_atom() => {
                    let (y, s) = self.power()?;
                    acc = acc.concat(&y);
                    shape = product_shape(shape, s);
                }
                _ => return Ok((acc, shape)),
            }
        }
    }

    fn unary(&mut self) -> Result<(AlgebraElement, Shape), ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let (x, s) = self.unary()?;
            let s = if s == Shape::Scalar { s } else { Shape::Other };
            return Ok((x.neg(), s));
        }
        self.power()
    }

    fn power(&mut self) -> Result<(AlgebraElement, Shape), ParseError> {
        let (base, shape) = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok((base, shape));
        }
        self.bump();
        let col = self.column();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(k) = self.peek().clone() else {
            let c = self.column();
            return self.err(
                c,
                format!("expected exponent, found {}", describe(self.peek())),
            );
        };
        self.bump();
        let Ok(k) = u32::try_from(&k) else {
            return self.err(col, "exponent too large");
        };
        if !negative {
            return Ok((repeat(&base, k), shape));
        }
        match shape {
            Shape::Scalar => {
                let c = base.as_scalar().expect("scalar shape");
                match c.inv() {
                    Ok(inv) => Ok((AlgebraElement::scalar(inv.pow(k as i64)), shape)),
                    Err(_) => self.err(col, "negative power of zero"),
                }
            }
            Shape::TPower => Ok((repeat(&invert_t_power(&base), k), shape)),
            Shape::CLetter => self.err(col, "exponent on C must be nonnegative"),
            Shape::Other => self.err(col, "negative exponent on a non-invertible factor"),
        }
    }

    fn atom(&mut self) -> Result<(AlgebraElement, Shape), ParseError> {
        let col = self.column();
        match self.bump() {
            Tok::Int(n) => Ok((
                AlgebraElement::scalar(RatFunc::from_bigint(n)),
                Shape::Scalar,
            )),
            Tok::LParen => {
                let x = self.expr()?;
                self.expect(Tok::RParen)?;
                let shape = classify(&x);
                Ok((x, shape))
            }
            Tok::Ident(name) => match name.as_str() {
                "p" => Ok((AlgebraElement::scalar(RatFunc::p()), Shape::Scalar)),
                "q" => Ok((AlgebraElement::scalar(RatFunc::q()), Shape::Scalar)),
                "T" => Ok((AlgebraElement::t(), Shape::TPower)),
                "Tinv" => Ok((AlgebraElement::tinv(), Shape::TPower)),
                "C" => Ok((AlgebraElement::c(), Shape::CLetter)),
                "L" => {
                    self.expect(Tok::LParen)?;
                    let neg = if *self.peek() == Tok::Minus {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    let icol = self.column();
                    let Tok::Int(n) = self.peek().clone() else {
                        return self.err(
                            icol,
                            format!("expected integer index, found {}", describe(self.peek())),
                        );
                    };
                    self.bump();
                    let Ok(n) = i64::try_from(&n) else {
                        return self.err(icol, "index out of range");
                    };
                    self.expect(Tok::RParen)?;
                    Ok((AlgebraElement::l(if neg { -n } else { n }), Shape::Other))
                }
                _ => self.err(col, format!("unknown symbol '{name}'")),
            },
            t => self.err(col, format!("unexpected {}", describe(&t))),
        }
    }
}

fn product_shape(a: Shape, b: Shape) -> Shape {
    match (a, b) {
        (Shape::Scalar, s) | (s, Shape::Scalar) => s,
        (Shape::TPower, Shape::TPower) => Shape::TPower,
        _ => Shape::Other,
    }
}

/// Shape of a parenthesized subexpression.
fn classify(x: &AlgebraElement) -> Shape {
    if x.as_scalar().is_some() {
        return Shape::Scalar;
    }
    let mut terms = x.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() && w.letters().iter().all(|g| g.is_t()) => Shape::TPower,
        (Some((w, c)), None) if c.is_one() && w.letters() == [Generator::C] => Shape::CLetter,
        _ => Shape::Other,
    }
}

fn invert_t_power(x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::from_terms(x.terms().map(|(w, c)| {
        let inv: Word = w
            .reversed()
            .letters()
            .iter()
            .map(|g| match g {
                Generator::T => Generator::Tinv,
                _ => Generator::T,
            })
            .collect();
        (inv, c.clone())
    }))
}

fn repeat(x: &AlgebraElement, k: u32) -> AlgebraElement {
    let mut out = AlgebraElement::one();
    for _ in 0..k {
        out = out.concat(x);
    }
    out
}

/// Parses an element of the free algebra. The result is not normalized.
pub fn parse_element(src: &str) -> Result<AlgebraElement, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    if *p.peek() == Tok::End {
        return p.err(1, "empty expression");
    }
    let x = p.expr()?;
    if *p.peek() != Tok::End {
        let col = p.column();
        return p.err(col, format!("unexpected {}", describe(p.peek())));
    }
    Ok(x)
}

/// Parses a scalar expression in `p, q`.
pub fn parse_scalar(src: &str) -> Result<RatFunc, ParseError> {
    let x = parse_element(src)?;
    x.as_scalar().ok_or(ParseError {
        column: 1,
        message: "expected a scalar in p and q".into(),
    })
}
