use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

fn err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            std::str::from_utf8(&self.s[start..self.pos]).ok()
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits().ok_or_else(|| err(format!("expected digits at offset {}", self.pos)))?;
        d.parse::<BigInt>().map_err(|e| err(e.to_string()))
    }

    fn small(&mut self, what: &str) -> Result<u64> {
        let d = self.digits().ok_or_else(|| err(format!("expected {} at offset {}", what, self.pos)))?;
        d.parse::<u64>().map_err(|_| err(format!("{} out of range", what)))
    }
}

/// Largest root-of-unity order accepted from text.
const MAX_ORDER: u64 = 1 << 16;

/// Parses the rendering produced by `Display`. Exponents need not be basis
/// exponents and orders need not be normalized.
pub(super) fn parse_cyclotomic(text: &str) -> Result<Cyclotomic> {
    let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
    let mut total = Cyclotomic::zero();
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            None if first => return Err(err("empty expression")),
            None => return Err(err("dangling operator")),
            _ => {}
        }
        if cur.eat(b'-') {
            negative = true;
        } else if cur.eat(b'+') {
            if first {
                return Err(err("leading '+'"));
            }
        } else if !first {
            return Err(err(format!("expected '+' or '-' at offset {}", cur.pos)));
        }
        let mut coeff = Rational::one();
        let mut has_coeff = false;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let num = cur.integer()?;
            let den = if cur.eat(b'/') { cur.integer()? } else { BigInt::one() };
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            coeff = Rational::new(num, den);
            has_coeff = true;
        }
        let mut term = Cyclotomic::from_rational(coeff);
        let wants_root = if has_coeff { cur.eat(b'*') } else { true };
        if wants_root {
            cur.expect(b'z')?;
            cur.expect(b'(')?;
            let n = cur.small("order")?;
            if n == 0 || n > MAX_ORDER {
                return Err(err("root order out of range"));
            }
            cur.expect(b')')?;
            let k = if cur.eat(b'^') { cur.small("exponent")? % n } else { 1 };
            term = &term * &Cyclotomic::root_of_unity(n as u32, k as i64);
        }
        if negative {
            term = -term;
        }
        total = &total + &term;
        first = false;
        if cur.peek().is_none() {
            return Ok(total);
        }
        if !matches!(cur.peek(), Some(b'+') | Some(b'-')) {
            return Err(err(format!("unexpected character at offset {}", cur.pos)));
        }
    }
}
