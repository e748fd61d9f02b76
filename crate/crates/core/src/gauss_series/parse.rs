//! Text form of series: `(2+3i)X^2 + X^5`, `1/2 + iX^3`, `0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{GaussRat, Series};
use crate::error::{Error, Result};

/// Extra known exponents beyond the highest written one.
pub const DEFAULT_HEADROOM: u32 = 4;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
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

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let n: BigInt = self.digits()?.parse().expect("digits parse");
        if self.eat(b'/') {
            let at = self.pos;
            let d: BigInt = self.digits()?.parse().expect("digits parse");
            if d.is_zero() {
                return Err(Error::Syntax { pos: at, msg: "zero denominator".into() });
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from_integer(n))
    }

    /// `rational ['i'] | 'i'`, unsigned.
    fn part(&mut self) -> Result<GaussRat> {
        if self.eat(b'i') {
            return Ok(GaussRat::i());
        }
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return self.err("expected a number or `i`");
        }
        let r = self.rational()?;
        if self.eat(b'i') {
            Ok(GaussRat::new(BigRational::zero(), r))
        } else {
            Ok(GaussRat::real(r))
        }
    }

    /// Contents of a parenthesised coefficient, after `(`.
    fn paren(&mut self) -> Result<GaussRat> {
        let mut acc = GaussRat::zero();
        self.skip_ws();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            self.skip_ws();
            let p = self.part()?;
            acc += &(if neg { -p } else { p });
            self.skip_ws();
            if self.eat(b')') {
                return Ok(acc);
            }
            neg = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return self.err("expected `+`, `-` or `)`"),
            };
            self.pos += 1;
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let braced = self.eat(b'{');
        self.skip_ws();
        let at = self.pos;
        let k: u32 =
            self.digits()?.parse().map_err(|_| Error::Syntax { pos: at, msg: "exponent out of range".into() })?;
        self.skip_ws();
        if braced && !self.eat(b'}') {
            return self.err("expected `}`");
        }
        Ok(k)
    }

    fn term(&mut self) -> Result<(GaussRat, u32)> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                Some(self.paren()?)
            }
            Some(b) if b.is_ascii_digit() || b == b'i' => Some(self.part()?),
            _ => None,
        };
        self.skip_ws();
        let has_coeff = coeff.is_some();
        if has_coeff && self.eat(b'*') {
            self.skip_ws();
            if !matches!(self.peek(), Some(b'X' | b'x')) {
                return self.err("expected `X` after `*`");
            }
        }
        if matches!(self.peek(), Some(b'X' | b'x')) {
            self.pos += 1;
            self.skip_ws();
            let k = if self.eat(b'^') {
                self.skip_ws();
                self.exponent()?
            } else {
                1
            };
            return Ok((coeff.unwrap_or_else(GaussRat::one), k));
        }
        match coeff {
            Some(c) => Ok((c, 0)),
            None => self.err("expected a coefficient or `X`"),
        }
    }
}

/// Parses the series grammar. Without an explicit precision the result
/// knows coefficients up to the highest written exponent plus four.
pub fn parse_series(text: &str, precision: Option<u32>) -> Result<Series> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    cur.skip_ws();
    if cur.peek().is_none() {
        return cur.err("empty input; write the zero series as `0`");
    }
    let mut neg = cur.eat(b'-');
    if !neg {
        cur.eat(b'+');
    }
    let mut terms = Vec::new();
    loop {
        let (c, k) = cur.term()?;
        terms.push((k, if neg { -c } else { c }));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => neg = false,
            Some(b'-') => neg = true,
            Some(_) => return cur.err("expected `+` or `-`"),
        }
        cur.pos += 1;
    }
    let max_exp = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let p = match precision {
        Some(0) => return Err(Error::Precision { needed: 1, have: 0 }),
        Some(p) if p <= max_exp => return Err(Error::Precision { needed: max_exp + 1, have: p }),
        Some(p) => p,
        None => max_exp
            .checked_add(DEFAULT_HEADROOM)
            .ok_or_else(|| Error::Syntax { pos: 0, msg: "exponent out of range".into() })?,
    };
    Ok(Series::from_terms(terms, p))
}

fn coeff_body(c: &GaussRat, k: u32) -> String {
    let abs = if c.is_pure() && c.pure_is_negative() { -c } else { c.clone() };
    let body = if !abs.is_pure() {
        format!("({abs})")
    } else if k > 0 && abs.is_one() {
        String::new()
    } else {
        abs.to_string()
    };
    match k {
        0 => body,
        1 => format!("{body}X"),
        _ => format!("{body}X^{k}"),
    }
}

pub(super) fn format_series(s: &Series) -> String {
    let mut out = String::new();
    for (i, (&k, c)) in s.terms().enumerate() {
        let neg = c.is_pure() && c.pure_is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&coeff_body(c, k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
