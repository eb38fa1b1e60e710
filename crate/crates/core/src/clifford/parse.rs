//! Text syntax for Clifford elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := scalar ['*' word] | word
//! word   := '1' | ('e' index)+          (generators multiplied left to right)
//! scalar := '(' complex ')' | complex
//! complex:= real [('+' | '-') [real] 'i'] | [real] 'i'   (no spaces inside)
//! real   := digits ['/' digits]
//! ```
//!
//! Examples: `e1`, `-1 * 1`, `2+3i * e1e3`, `1/2 * e2 + i * e1e2`.
//! Words need not be sorted: `e2e1` parses as `-1 * e1e2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::element::{CliffordElement, MAX_GENERATORS};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
struct Term {
    coeff: GaussianRational,
    word: Vec<usize>,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// First non-whitespace byte at or after `at`.
    fn peek_from(&self, mut at: usize) -> Option<u8> {
        while at < self.src.len() && self.src[at].is_ascii_whitespace() {
            at += 1;
        }
        self.src.get(at).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Input(format!("at column {}: {}", self.pos + 1, msg.into()))
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn real(&mut self) -> Result<Option<BigRational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    /// Does a `+`/`-` directly at the cursor introduce an imaginary part
    /// (`+3i`, `-i`, `+1/2i`) rather than a new term?
    fn imaginary_follows(&self) -> bool {
        let mut at = self.pos;
        if !matches!(self.src.get(at), Some(b'+' | b'-')) {
            return false;
        }
        at += 1;
        while at < self.src.len() && (self.src[at].is_ascii_digit() || self.src[at] == b'/') {
            at += 1;
        }
        self.src.get(at) == Some(&b'i')
    }

    fn complex(&mut self) -> Result<Option<GaussianRational>> {
        let re = self.real()?;
        if self.peek() == Some(b'i') {
            self.pos += 1;
            let im = re.unwrap_or_else(BigRational::one);
            return Ok(Some(GaussianRational::new(BigRational::zero(), im)));
        }
        let Some(re) = re else {
            return Ok(None);
        };
        if self.imaginary_follows() {
            let negative = self.bump() == Some(b'-');
            let im = self.real()?.unwrap_or_else(BigRational::one);
            if !self.eat(b'i') {
                return Err(self.err("expected `i`"));
            }
            let im = if negative { -im } else { im };
            return Ok(Some(GaussianRational::new(re, im)));
        }
        Ok(Some(GaussianRational::real(re)))
    }

    fn scalar(&mut self) -> Result<Option<GaussianRational>> {
        if self.eat(b'(') {
            let negative = self.eat(b'-');
            let z = self.complex()?.ok_or_else(|| self.err("expected a number"))?;
            if !self.eat(b')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(Some(if negative { -z } else { z }));
        }
        self.complex()
    }

    fn word(&mut self) -> Result<Option<Vec<usize>>> {
        match self.peek() {
            Some(b'1') if !matches!(self.peek_from(self.pos + 1), Some(b'0'..=b'9' | b'/')) => {
                self.pos += 1;
                Ok(Some(Vec::new()))
            }
            Some(b'e') => {
                let mut word = Vec::new();
                while self.src.get(self.pos) == Some(&b'e') {
                    self.pos += 1;
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let idx: usize = std::str::from_utf8(&self.src[start..self.pos])
                        .ok()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| self.err("expected a generator index after `e`"))?;
                    if idx == 0 || idx > MAX_GENERATORS {
                        return Err(self.err(format!("generator index must be in 1..={MAX_GENERATORS}")));
                    }
                    word.push(idx);
                }
                Ok(Some(word))
            }
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<Term> {
        if self.peek() == Some(b'e') {
            let word = self.word()?.expect("starts with `e`");
            return Ok(Term { coeff: GaussianRational::one(), word });
        }
        let coeff = self.scalar()?.ok_or_else(|| self.err("expected a term"))?;
        if self.eat(b'*') {
            let word = self.word()?.ok_or_else(|| self.err("expected a basis word after `*`"))?;
            Ok(Term { coeff, word })
        } else {
            Ok(Term { coeff, word: Vec::new() })
        }
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => {
                    self.pos += 1;
                    negative = self.eat(b'-');
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return Err(self.err(format!("unexpected `{}`", c as char))),
            }
        }
    }
}

/// Parses an element of `ℂCliffₙ`. With `n = None` the generator count is
/// the largest index that appears.
pub fn parse_element(text: &str, n: Option<usize>) -> Result<CliffordElement> {
    let terms = Lexer::new(text).expr()?;
    let top = terms.iter().flat_map(|t| t.word.iter().copied()).max().unwrap_or(0);
    let n = match n {
        Some(n) if top > n => {
            return Err(Error::Input(format!("generator e{top} does not exist in Cliff_{n}")));
        }
        Some(n) if n > MAX_GENERATORS => {
            return Err(Error::Input(format!("at most {MAX_GENERATORS} generators are supported")));
        }
        Some(n) => n,
        None => top,
    };
    let mut out = CliffordElement::zero(n);
    for t in terms {
        let mono = CliffordElement::monomial(n, &t.word)?;
        out = &out + &mono.scale(&t.coeff);
    }
    Ok(out)
}
