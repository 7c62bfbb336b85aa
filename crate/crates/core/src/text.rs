//! Text syntax for monomials, ideals and decompositions.
//!
//! ```text
//! input     := ideal ( ("&" | "∩") ideal )*
//! ideal     := "(" [ monomial ( "," monomial )* ] ")"
//! monomial  := "1" | "0" | factor ( "*" factor )*
//! factor    := "x" index [ "^" exponent ]      index, exponent >= 1
//! ```
//!
//! Several ideals joined by `&` denote their intersection. `(0)` is the zero
//! ideal and `1` the unit monomial. Whitespace is ignored between tokens.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;

type RawMonomial = Vec<(usize, u64)>;

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser { chars: src.chars().collect(), pos: 0, line: 1, column: 1 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, column: self.column, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return self.error("expected a number");
        }
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.error(format!("number {digits} is too large")),
        }
    }

    fn input(&mut self) -> Result<Vec<Option<Vec<RawMonomial>>>> {
        let mut ideals = vec![self.ideal()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(ideals),
                Some('&') | Some('∩') => {
                    self.bump();
                    ideals.push(self.ideal()?);
                }
                Some(c) => return self.error(format!("unexpected '{c}'")),
            }
        }
    }

    /// `None` is the zero ideal.
    fn ideal(&mut self) -> Result<Option<Vec<RawMonomial>>> {
        self.expect('(')?;
        self.skip_ws();
        if self.peek() == Some(')') {
            return self.error("empty generator list; write (0) for the zero ideal");
        }
        if self.peek() == Some('0') {
            self.bump();
            self.expect(')')?;
            return Ok(None);
        }
        let mut gens = vec![self.monomial()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                    gens.push(self.monomial()?);
                }
                Some(')') => {
                    self.bump();
                    return Ok(Some(gens));
                }
                Some(c) => return self.error(format!("expected ',' or ')', found '{c}'")),
                None => return self.error("unterminated ideal"),
            }
        }
    }

    fn monomial(&mut self) -> Result<RawMonomial> {
        self.skip_ws();
        if self.peek() == Some('1') {
            self.bump();
            return Ok(Vec::new());
        }
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(factors);
            }
            self.bump();
            factors.push(self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        match self.peek() {
            Some('x') | Some('X') => {
                self.bump();
            }
            Some(c) => return self.error(format!("expected a variable, found '{c}'")),
            None => return self.error("expected a variable, found end of input"),
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.error("variable index must be a number");
        }
        let index = self.number()?;
        if index == 0 {
            return self.error("variables are numbered from x1");
        }
        self.skip_ws();
        let exp = if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let e = self.number()?;
            if e == 0 {
                return self.error("zero exponents are not allowed");
            }
            e
        } else {
            1
        };
        let index = usize::try_from(index).or_else(|_| self.error("variable index too large"))?;
        Ok((index - 1, exp))
    }
}

/// Parse an ideal or an `&`-joined intersection; `n` is the largest variable index used.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_with(text, None, &Limits::default())
}

/// Parse with an optional ambient override (`vars` must cover every index used).
pub fn parse_ideal_with(text: &str, vars: Option<usize>, limits: &Limits) -> Result<MonomialIdeal> {
    let raw = Parser::new(text).input()?;
    let used = raw.iter().flatten().flatten().flatten().map(|&(k, _)| k + 1).max().unwrap_or(0);
    let n = match vars {
        Some(v) if v < used => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("x{used} used but only {v} variables declared"),
            })
        }
        Some(v) => v,
        None => used,
    };
    let mut result: Option<MonomialIdeal> = None;
    for piece in raw {
        let ideal = match piece {
            None => MonomialIdeal::zero(n),
            Some(gens) => {
                let mut monomials = Vec::with_capacity(gens.len());
                for g in gens {
                    let mut exps = vec![0u32; n];
                    for (k, e) in g {
                        let total = exps[k] as u64 + e;
                        if total > limits.max_exponent as u64 {
                            return Err(Error::ExponentLimit { exponent: total, limit: limits.max_exponent });
                        }
                        exps[k] = total as u32;
                    }
                    monomials.push(Monomial::new(exps));
                }
                MonomialIdeal::new(n, monomials)?
            }
        };
        result = Some(match result {
            None => ideal,
            Some(acc) => acc.intersect(&ideal)?,
        });
    }
    Ok(result.expect("at least one ideal parsed"))
}
