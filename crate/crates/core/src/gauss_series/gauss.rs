//! Gaussian rationals `re + im·i` with exact `BigRational` parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_fracs(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRat::new(ratio(re.0, re.1), ratio(im.0, im.1))
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Syntax { pos: 0, msg: format!("invalid rational `{s}`") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::from_ints(v, 0)
    }
}

impl From<BigRational> for GaussRat {
    fn from(v: BigRational) -> Self {
        GaussRat::real(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $tr<&GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
        impl $tr<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussRat::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussRat::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| gauss_mul(a, b));
// Panics on division by zero, like the scalar types; use `inv` to get an error instead.
forward_binop!(Div, div, |a, b| gauss_mul(a, &b.inv().expect("division by zero Gaussian rational")));

/// `xy ± zw` over a common denominator, reduced once.
fn mul_pair(x: &BigRational, y: &BigRational, z: &BigRational, w: &BigRational, plus: bool) -> BigRational {
    let l = x.numer() * y.numer() * z.denom() * w.denom();
    let r = z.numer() * w.numer() * x.denom() * y.denom();
    let n = if plus { l + r } else { l - r };
    BigRational::new(n, x.denom() * y.denom() * z.denom() * w.denom())
}

fn gauss_mul(a: &GaussRat, b: &GaussRat) -> GaussRat {
    if a.im.is_zero() {
        return GaussRat::new(&a.re * &b.re, &a.re * &b.im);
    }
    if b.im.is_zero() {
        return GaussRat::new(&a.re * &b.re, &a.im * &b.re);
    }
    GaussRat::new(mul_pair(&a.re, &b.re, &a.im, &b.im, false), mul_pair(&a.re, &b.im, &a.im, &b.re, true))
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes `|im|·i` without the sign: `i`, `3i`, `1/2i`.
fn fmt_imag_abs(im: &BigRational) -> String {
    let a = im.abs();
    if a.is_one() {
        "i".to_string()
    } else {
        format!("{}i", fmt_rat(&a))
    }
}

impl GaussRat {
    /// True when the text form is a single signed real or imaginary part.
    pub(crate) fn is_pure(&self) -> bool {
        self.re.is_zero() || self.im.is_zero()
    }

    /// Sign of the single nonzero part of a pure value.
    pub(crate) fn pure_is_negative(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let s = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{s}{}", fmt_imag_abs(&self.im));
        }
        write!(f, "{}{sign}{}", fmt_rat(&self.re), fmt_imag_abs(&self.im))
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts the constant-term subset of the series grammar, e.g. `2-3i`, `(1/2+i)`.
    fn from_str(s: &str) -> Result<Self> {
        let series = super::parse::parse_series(s, None)?;
        if let Some((&k, _)) = series.terms().find(|(&k, _)| k > 0) {
            return Err(Error::Syntax { pos: 0, msg: format!("expected a scalar, found X^{k}") });
        }
        Ok(series.coeff(0))
    }
}

#[derive(Serialize, Deserialize)]
struct GaussRepr {
    re: String,
    im: String,
}

impl Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussRepr { re: fmt_rat(&self.re), im: fmt_rat(&self.im) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GaussRepr::deserialize(d)?;
        let re = parse_rational(&r.re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&r.im).map_err(serde::de::Error::custom)?;
        Ok(GaussRat::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GaussRat::from_ints(1, 2);
        let b = GaussRat::from_ints(3, -1);
        assert_eq!(&a * &b, GaussRat::from_ints(5, 5));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(GaussRat::i().square(), GaussRat::from_ints(-1, 0));
        assert!(GaussRat::zero().inv().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::from_ints(2, 3).to_string(), "2+3i");
        assert_eq!(GaussRat::from_ints(0, -1).to_string(), "-i");
        assert_eq!(GaussRat::from_fracs((1, 2), (-1, 3)).to_string(), "1/2-1/3i");
        assert_eq!(GaussRat::from_ints(-4, 0).to_string(), "-4");
    }

    #[test]
    fn reduced_storage() {
        let a = GaussRat::from_fracs((2, -4), (0, 7));
        assert_eq!(a, GaussRat::from_fracs((-1, 2), (0, 1)));
        assert_eq!(a.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_scalar() {
        assert_eq!("2-3i".parse::<GaussRat>().unwrap(), GaussRat::from_ints(2, -3));
        assert_eq!("(1/2+i)".parse::<GaussRat>().unwrap(), GaussRat::from_fracs((1, 2), (1, 1)));
        assert!("1+X".parse::<GaussRat>().is_err());
    }

    #[test]
    fn json_shape() {
        let a = GaussRat::from_fracs((2, 1), (-3, 4));
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"re":"2","im":"-3/4"}"#);
        assert_eq!(serde_json::from_str::<GaussRat>(&j).unwrap(), a);
        assert!(serde_json::from_str::<GaussRat>(r#"{"re":"1/0","im":"0"}"#).is_err());
    }
}
