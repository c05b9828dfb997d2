//! Parser for polynomial expressions in `i` and `n`.
//!
//! ```text
//! poly   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' unsigned-integer)?
//! base   := unsigned-integer | 'i' | 'n' | parameter | '(' poly ')'
//! ```
//!
//! Whitespace is insignificant and integer literals are unbounded. Named
//! parameters (such as `k`) are only accepted when a value is bound for them,
//! and are replaced by that value while parsing.

use num_bigint::BigInt;
use thiserror::Error;

use crate::wz::BivariatePolynomial;

/// Largest exponent accepted after `^`.
pub const DEFAULT_MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn parse_polynomial(text: &str) -> Result<BivariatePolynomial, ParseError> {
    parse_polynomial_with(text, &[])
}

/// Parses with integer values bound to extra identifiers.
pub fn parse_polynomial_with(text: &str, params: &[(&str, i64)]) -> Result<BivariatePolynomial, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        params,
        max_exponent: DEFAULT_MAX_EXPONENT,
    };
    let poly = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.chars[parser.pos])));
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    params: &'a [(&'a str, i64)],
    max_exponent: u32,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        let (mut line, mut column) = (1, 1);
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected an unsigned integer exponent after '^'"));
        }
        let exp: u32 = digits
            .parse()
            .ok()
            .filter(|e| *e <= self.max_exponent)
            .ok_or_else(|| {
                self.pos = start;
                self.error(format!("exponent {digits} exceeds the limit {}", self.max_exponent))
            })?;
        Ok(base.pow(exp))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> Result<BivariatePolynomial, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let value: BigInt = digits.parse().expect("digit run parses");
                Ok(BivariatePolynomial::constant(value))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match name.as_str() {
                    "i" => Ok(BivariatePolynomial::i()),
                    "n" => Ok(BivariatePolynomial::n()),
                    other => match self.params.iter().find(|(p, _)| *p == other) {
                        Some((_, v)) => Ok(BivariatePolynomial::constant(*v)),
                        None => {
                            self.pos = start;
                            Err(self.error(format!("unknown identifier '{other}'")))
                        }
                    },
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
