//! Text form: `w*X^{3/2} + X^2`, `(w+1)X + 1`, `0`.

use super::{Dyadic, DyadicSeries, F4};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn exponent(&mut self) -> Result<Dyadic> {
        let braced = self.eat(b'{');
        let at = self.pos;
        let mut text = self.digits()?;
        if self.eat(b'/') {
            text.push('/');
            text.push_str(&self.digits()?);
        }
        if braced && !self.eat(b'}') {
            return self.err("expected `}`");
        }
        text.parse().map_err(|e: Error| Error::Syntax { pos: at, msg: e.to_string() })
    }

    /// `0`, `1`, `w`, or a parenthesized `(w+1)`.
    fn coefficient(&mut self) -> Result<Option<F4>> {
        self.skip_ws();
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Some(F4::ZERO))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Some(F4::ONE))
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Some(F4::W))
            }
            Some(b'(') => {
                self.pos += 1;
                let mut c = F4::ZERO;
                loop {
                    match self.coefficient()? {
                        Some(d) => c = c + d,
                        None => return self.err("expected an F4 element"),
                    }
                    if self.eat(b')') {
                        return Ok(Some(c));
                    }
                    if !self.eat(b'+') {
                        return self.err("expected `+` or `)`");
                    }
                }
            }
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<(Dyadic, F4)> {
        let start = self.pos;
        let coef = self.coefficient()?;
        if coef.is_some() {
            self.eat(b'*');
        }
        self.skip_ws();
        if matches!(self.peek(), Some(b'X' | b'x')) {
            self.pos += 1;
            let e = if self.eat(b'^') { self.exponent()? } else { Dyadic::int(1) };
            Ok((e, coef.unwrap_or(F4::ONE)))
        } else {
            match coef {
                Some(c) => Ok((Dyadic::zero(), c)),
                None => {
                    self.pos = start;
                    self.skip_ws();
                    self.err("expected a term")
                }
            }
        }
    }
}

pub fn parse_dyadic_series(text: &str) -> Result<DyadicSeries> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    cur.skip_ws();
    if cur.peek().is_none() {
        return cur.err("empty input");
    }
    let mut terms = Vec::new();
    // `-1 = 1` in characteristic two, so a minus sign is accepted as a plus.
    cur.eat(b'-');
    loop {
        terms.push(cur.term()?);
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        if !(cur.eat(b'+') || cur.eat(b'-')) {
            return cur.err("expected `+`");
        }
    }
    Ok(DyadicSeries::from_terms(terms))
}

fn format_exponent(e: &Dyadic) -> String {
    if e.is_integer() {
        if e == &Dyadic::int(1) {
            "X".into()
        } else {
            format!("X^{e}")
        }
    } else {
        format!("X^{{{e}}}")
    }
}

pub fn format_dyadic_series(s: &DyadicSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s
        .terms()
        .map(|(e, c)| match (e.is_zero(), c) {
            (true, c) => c.to_string(),
            (false, F4::ONE) => format_exponent(e),
            (false, F4::W) => format!("w*{}", format_exponent(e)),
            (false, c) => format!("({c})*{}", format_exponent(e)),
        })
        .collect();
    parts.join(" + ")
}
