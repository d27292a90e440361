//! Text format shared by the toolkit.
//!
//! Two input forms are accepted: the coefficient list `[c0, c1, ..., cd]`
//! (ascending) and a human form such as `X^3 - 2` or `(X-1)*(X-2)`.
//! Products may be written with `*` or by juxtaposition (`2X`, `(X-1)(X+1)`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

const MAX_EXPONENT: u32 = 4096;

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("X")?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// Coefficient-list form `[c0, c1, ..., cd]`.
    pub fn to_coeff_string(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    pub fn parse(s: &str) -> Result<IntPoly> {
        let trimmed = s.trim_start();
        let offset = s.len() - trimmed.len();
        if trimmed.starts_with('[') {
            parse_coeff_list(s, offset)
        } else {
            let mut p = Parser { src: s.as_bytes(), pos: 0 };
            let v = p.expr()?;
            p.skip_ws();
            if p.pos < p.src.len() {
                return Err(p.err("unexpected trailing input"));
            }
            Ok(v)
        }
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntPoly::parse(s)
    }
}

impl From<IntPoly> for String {
    fn from(p: IntPoly) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for IntPoly {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        IntPoly::parse(&s)
    }
}

fn parse_coeff_list(s: &str, start: usize) -> Result<IntPoly> {
    let body = s[start + 1..].trim_end();
    let inner = body.strip_suffix(']').ok_or(Error::Parse {
        pos: s.len(),
        msg: "missing closing ']'".into(),
    })?;
    if inner.trim().is_empty() {
        return Ok(IntPoly::zero());
    }
    let mut coeffs = Vec::new();
    let mut pos = start + 1;
    for part in inner.split(',') {
        let t = part.trim();
        let c = t.parse::<BigInt>().map_err(|_| Error::Parse {
            pos: pos + (part.len() - part.trim_start().len()),
            msg: format!("invalid integer coefficient '{t}'"),
        })?;
        coeffs.push(c);
        pos += part.len() + 1;
    }
    Ok(IntPoly::new(coeffs))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c.is_ascii_digit() || c == b'X' || c == b'x' || c == b'(' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(Error::Parse {
                    pos: at,
                    msg: format!("exponent must be an integer in [0, {MAX_EXPONENT}]"),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(b'X') | Some(b'x') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.integer()?)),
            Some(_) => Err(self.err("expected an integer, 'X' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }
}
