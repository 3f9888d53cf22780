//! Text format for polynomials in `x1, x2, ...`:
//!
//! ```text
//! poly   := ['+'|'-'] term ( ('+'|'-') term )*
//! term   := coeff [ '*' mono ] | mono
//! coeff  := int | int '/' posint
//! mono   := factor ( '*' factor )*
//! factor := 'x' posint [ '^' int ]
//! ```
//!
//! Whitespace between tokens is ignored.

use std::collections::BTreeMap;
use std::fmt;

use closedpoly::monomial::MAX_DEGREE;
use closedpoly::{MultiPoly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest accepted variable index.
pub const MAX_VARIABLES: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub poly: MultiPoly,
    /// Largest variable index that appears (at least 1).
    pub nvars: usize,
    pub source: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Var(s) => write!(f, "variable x{s}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    })
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, column: 1 };
    let mut chars = text.chars().peekable();
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            advance(c, &mut pos);
            chars.next();
            continue;
        }
        let digits = |chars: &mut std::iter::Peekable<std::str::Chars>, pos: &mut Pos| {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                pos.column += 1;
                chars.next();
            }
            s
        };
        let tok = match c {
            '0'..='9' => Tok::Int(digits(&mut chars, &mut pos)),
            'x' => {
                chars.next();
                pos.column += 1;
                let s = digits(&mut chars, &mut pos);
                if s.is_empty() {
                    return err(pos, "expected a variable index after 'x'");
                }
                Tok::Var(s)
            }
            '+' | '-' | '*' | '/' | '^' => {
                chars.next();
                pos.column += 1;
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    _ => Tok::Caret,
                }
            }
            other => return err(start, format!("unexpected character {other:?}")),
        };
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// Sparse exponents keyed by 1-based variable index.
type Exps = BTreeMap<usize, u32>;

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        err(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek()),
        )
    }

    fn poly(&mut self) -> Result<Vec<(Exps, Rational, Pos)>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negative = true;
            }
            _ => {}
        }
        loop {
            let start = self.pos();
            let (exps, c) = self.term()?;
            terms.push((exps, if negative { -c } else { c }, start));
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                Tok::End => return Ok(terms),
                _ => return self.unexpected("'+', '-' or end of input"),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(Exps, Rational), ParseError> {
        match self.peek() {
            Tok::Int(_) => {
                let c = self.coeff()?;
                if *self.peek() == Tok::Star {
                    self.bump();
                    Ok((self.mono()?, c))
                } else {
                    Ok((Exps::new(), c))
                }
            }
            Tok::Var(_) => Ok((self.mono()?, Rational::from_integer(1.into()))),
            _ => self.unexpected("a coefficient or a variable"),
        }
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let (Tok::Int(num), _) = self.bump() else {
            unreachable!("checked by caller")
        };
        let num: BigInt = num.parse().expect("ascii digits");
        if *self.peek() != Tok::Slash {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let pos = self.pos();
        let Tok::Int(den) = self.peek().clone() else {
            return self.unexpected("a denominator");
        };
        self.bump();
        let den: BigInt = den.parse().expect("ascii digits");
        if den.is_zero() {
            return err(pos, "zero denominator");
        }
        Ok(Rational::new(num, den))
    }

    fn mono(&mut self) -> Result<Exps, ParseError> {
        let mut exps = Exps::new();
        loop {
            self.factor(&mut exps)?;
            if *self.peek() != Tok::Star {
                return Ok(exps);
            }
            self.bump();
        }
    }

    fn factor(&mut self, exps: &mut Exps) -> Result<(), ParseError> {
        let pos = self.pos();
        let index = match self.peek() {
            Tok::Var(s) => s.clone(),
            _ => return self.unexpected("a variable"),
        };
        self.bump();
        let index = match index.parse::<usize>() {
            Ok(0) => return err(pos, "variable indices start at 1"),
            Ok(i) if i <= MAX_VARIABLES => i,
            _ => return err(pos, format!("variable index exceeds {MAX_VARIABLES}")),
        };
        let mut e = 1u32;
        if *self.peek() == Tok::Caret {
            self.bump();
            let epos = self.pos();
            let Tok::Int(digits) = self.peek().clone() else {
                return self.unexpected("an exponent");
            };
            self.bump();
            e = match digits.parse::<u32>() {
                Ok(v) => v,
                Err(_) => return err(epos, "exponent overflow"),
            };
        }
        let slot = exps.entry(index).or_insert(0);
        match slot.checked_add(e) {
            Some(v) => *slot = v,
            None => return err(pos, "exponent overflow"),
        }
        Ok(())
    }
}

fn build(text: &str, nvars: Option<usize>) -> Result<ParsedInput, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser { toks, at: 0 };
    let terms = parser.poly()?;
    let used = terms
        .iter()
        .filter_map(|(e, _, _)| e.keys().next_back().copied())
        .max()
        .unwrap_or(1);
    let n = match nvars {
        Some(n) if n < used => {
            let pos = terms
                .iter()
                .find(|(e, _, _)| e.keys().any(|&i| i > n))
                .map(|t| t.2)
                .expect("exists");
            return err(pos, format!("variable x{used} is outside x1..x{n}"));
        }
        Some(n) => n,
        None => used,
    };
    let mut poly = MultiPoly::zero(n);
    for (exps, c, pos) in terms {
        let mut dense = vec![0u32; n];
        for (i, e) in exps {
            dense[i - 1] = e;
        }
        if dense.iter().map(|&e| u64::from(e)).sum::<u64>() > MAX_DEGREE {
            return err(pos, "exponent overflow");
        }
        let term =
            MultiPoly::from_terms(n, [(dense, c)]).expect("dense exponents of the right length");
        poly = &poly + &term;
    }
    Ok(ParsedInput {
        poly,
        nvars: n,
        source: text.to_string(),
    })
}

/// Parses `text`, inferring the number of variables from the largest index.
pub fn parse_poly(text: &str) -> Result<ParsedInput, ParseError> {
    build(text, None)
}

/// Parses `text` as a polynomial in exactly `nvars` variables.
pub fn parse_poly_in(text: &str, nvars: usize) -> Result<ParsedInput, ParseError> {
    build(text, Some(nvars))
}
