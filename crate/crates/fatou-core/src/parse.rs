//! Text format for rational maps.
//!
//! The grammar, shared by the CLI and test fixtures:
//!
//! ```text
//! map   := poly '/' poly | poly
//! poly  := term (('+'|'-') term)*
//! term  := coeff? ('z' ('^' int)?)?
//! coeff := real | real 'i' | 'i' | '(' real ',' real ')'
//! ```
//!
//! Either side of the `/` may be wrapped in parentheses, as in
//! `(1+z^2)/(2z)`. Complex coefficients are written `(a,b)` or assembled
//! from separate real and imaginary terms (`2+3i`). Errors carry the byte
//! offset of the offending character.

use crate::error::ParseError;
use crate::poly::Polynomial;
use crate::rational::RationalMap;
use num_complex::Complex64;
use std::str::FromStr;

const MAX_EXPONENT: usize = 100_000;

/// Parses a rational map, either `NUM/DEN` (split on the one top-level `/`)
/// or a bare polynomial. Construction failures such as a constant map are
/// reported as parse errors too.
pub fn parse_map(input: &str) -> Result<RationalMap, ParseError> {
    check_balance(input)?;
    let slashes: Vec<usize> = top_level_slashes(input);
    let (num, den) = match slashes.as_slice() {
        [] => (parse_range(input, 0, input.len())?, Polynomial::one()),
        [k] => (
            parse_range(input, 0, *k)?,
            parse_range(input, k + 1, input.len())?,
        ),
        [_, second, ..] => {
            return Err(ParseError::new(*second, "unexpected second '/'"));
        }
    };
    RationalMap::new(num, den).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses a bare polynomial (no `/`), accepting redundant outer parentheses.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    check_balance(input)?;
    if let Some(&k) = top_level_slashes(input).first() {
        return Err(ParseError::new(k, "'/' is not allowed in a polynomial"));
    }
    parse_range(input, 0, input.len())
}

impl FromStr for RationalMap {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<RationalMap, ParseError> {
        parse_map(s)
    }
}

fn check_balance(input: &str) -> Result<(), ParseError> {
    let mut depth: i64 = 0;
    for (i, b) in input.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(i, "unmatched ')'"));
                }
            }
            _ => {}
        }
    }
    if depth > 0 {
        return Err(ParseError::new(input.len(), "unclosed '('"));
    }
    Ok(())
}

fn top_level_slashes(input: &str) -> Vec<usize> {
    let mut depth = 0i64;
    let mut found = Vec::new();
    for (i, b) in input.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'/' if depth == 0 => found.push(i),
            _ => {}
        }
    }
    found
}

/// Parses `input[start..end]` as a polynomial, reporting positions relative
/// to the whole input.
fn parse_range(input: &str, start: usize, end: usize) -> Result<Polynomial, ParseError> {
    let bytes = input.as_bytes();
    let (mut lo, mut hi) = (start, end);
    // Strip matching outer parentheses, but never the parentheses of a
    // `(a,b)` coefficient, recognizable by its top-level comma.
    loop {
        while lo < hi && bytes[lo].is_ascii_whitespace() {
            lo += 1;
        }
        while hi > lo && bytes[hi - 1].is_ascii_whitespace() {
            hi -= 1;
        }
        if lo < hi && bytes[lo] == b'(' && matching_close(bytes, lo, hi) == Some(hi - 1) {
            let mut depth = 0i64;
            let mut has_comma = false;
            for &b in &bytes[lo + 1..hi - 1] {
                match b {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    b',' if depth == 0 => has_comma = true,
                    _ => {}
                }
            }
            if !has_comma {
                lo += 1;
                hi -= 1;
                continue;
            }
        }
        break;
    }
    Lexer { bytes, pos: lo, end: hi }.parse_poly()
}

fn matching_close(bytes: &[u8], open: usize, end: usize) -> Option<usize> {
    let mut depth = 0i64;
    for (i, &b) in bytes.iter().enumerate().take(end).skip(open) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    end: usize,
}

impl Lexer<'_> {
    fn parse_poly(mut self) -> Result<Polynomial, ParseError> {
        let mut coeffs: Vec<Complex64> = Vec::new();
        self.skip_ws();
        let mut first = true;
        loop {
            let sign = if first {
                if self.eat(b'-') {
                    -1.0
                } else {
                    self.eat(b'+');
                    1.0
                }
            } else {
                match self.next_byte() {
                    Some(b'+') => {
                        self.pos += 1;
                        1.0
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        -1.0
                    }
                    _ => return Err(self.err("expected '+' or '-'")),
                }
            };
            first = false;
            let (value, power) = self.parse_term()?;
            if power >= coeffs.len() {
                coeffs.resize(power + 1, Complex64::new(0.0, 0.0));
            }
            coeffs[power] += value * sign;
            self.skip_ws();
            if self.pos >= self.end {
                return Ok(Polynomial::new(coeffs));
            }
        }
    }

    fn parse_term(&mut self) -> Result<(Complex64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let coeff = match self.next_byte() {
            Some(b'(') => Some(self.parse_pair()?),
            Some(b'i') => {
                self.pos += 1;
                Some(Complex64::new(0.0, 1.0))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let x = self.parse_number()?;
                if self.next_byte() == Some(b'i') {
                    self.pos += 1;
                    Some(Complex64::new(0.0, x))
                } else {
                    Some(Complex64::new(x, 0.0))
                }
            }
            _ => None,
        };
        self.skip_ws();
        let mut saw_z = false;
        let mut power = 0usize;
        if self.next_byte() == Some(b'z') {
            self.pos += 1;
            saw_z = true;
            power = 1;
            self.skip_ws();
            if self.next_byte() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                power = self.parse_exponent()?;
            }
        }
        match coeff {
            None if !saw_z => Err(ParseError::new(start, "expected a term")),
            None => Ok((Complex64::new(1.0, 0.0), power)),
            Some(c) => Ok((c, if saw_z { power } else { 0 })),
        }
    }

    /// `(a,b)` coefficient; the opening parenthesis is at the cursor.
    fn parse_pair(&mut self) -> Result<Complex64, ParseError> {
        self.pos += 1; // '('
        self.skip_ws();
        let re = self.parse_signed_number()?;
        self.skip_ws();
        if !self.eat(b',') {
            return Err(self.err("expected ',' in complex pair"));
        }
        self.skip_ws();
        let im = self.parse_signed_number()?;
        self.skip_ws();
        if !self.eat(b')') {
            return Err(self.err("expected ')' closing complex pair"));
        }
        Ok(Complex64::new(re, im))
    }

    fn parse_signed_number(&mut self) -> Result<f64, ParseError> {
        let sign = if self.eat(b'-') {
            -1.0
        } else {
            self.eat(b'+');
            1.0
        };
        Ok(sign * self.parse_number()?)
    }

    /// An unsigned decimal literal with optional fraction and exponent.
    fn parse_number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        let mut digits = 0;
        while self.next_byte().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
            digits += 1;
        }
        if self.next_byte() == Some(b'.') {
            self.pos += 1;
            while self.next_byte().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            return Err(ParseError::new(start, "expected a number"));
        }
        // Consume an exponent only when actual digits follow it, so `2ez`
        // fails at the stray letter rather than inside the number.
        if matches!(self.next_byte(), Some(b'e') | Some(b'E')) {
            let mut probe = self.pos + 1;
            if probe < self.end && matches!(self.bytes[probe], b'+' | b'-') {
                probe += 1;
            }
            if probe < self.end && self.bytes[probe].is_ascii_digit() {
                self.pos = probe;
                while self.next_byte().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("number tokens are ASCII");
        f64::from_str(text).map_err(|_| ParseError::new(start, "malformed number"))
    }

    fn parse_exponent(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let mut value = 0usize;
        let mut digits = 0;
        while let Some(b) = self.next_byte().filter(|b| b.is_ascii_digit()) {
            value = value * 10 + (b - b'0') as usize;
            if value > MAX_EXPONENT {
                return Err(ParseError::new(start, "exponent too large"));
            }
            self.pos += 1;
            digits += 1;
        }
        if digits == 0 {
            return Err(ParseError::new(start, "expected an integer exponent"));
        }
        Ok(value)
    }

    fn skip_ws(&mut self) {
        while self.next_byte().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn next_byte(&self) -> Option<u8> {
        (self.pos < self.end).then(|| self.bytes[self.pos])
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.next_byte() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: &str) -> ParseError {
        ParseError::new(self.pos, message)
    }
}
