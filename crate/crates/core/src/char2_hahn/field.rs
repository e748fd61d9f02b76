//! The field `F4 = {0, 1, w, w+1}` with `w² = w + 1`, and dyadic exponents.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss_series::parse_rational;

/// `a + b·w` packed as `a | b << 1`, so the codes are `0, 1, 2 = w, 3 = w+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const W: F4 = F4(2);
    pub const W1: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::W1];

    pub fn from_code(code: u8) -> Result<F4> {
        if code < 4 {
            Ok(F4(code))
        } else {
            Err(Error::InvalidDescriptor(format!("F4 code {code} is not in 0..=3")))
        }
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// In the prime field `F2 = {0, 1}`.
    pub fn in_f2(self) -> bool {
        self.0 < 2
    }

    pub fn square(self) -> F4 {
        self * self
    }

    /// Inverse of Frobenius; `x⁴ = x` makes it squaring again.
    pub fn sqrt(self) -> F4 {
        self.square()
    }
}

impl TryFrom<u8> for F4 {
    type Error = Error;
    fn try_from(code: u8) -> Result<F4> {
        F4::from_code(code)
    }
}

impl From<F4> for u8 {
    fn from(x: F4) -> u8 {
        x.0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // characteristic two
impl Add for F4 {
    type Output = F4;
    fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, o: F4) -> F4 {
        let (a, b) = (self.0 & 1, self.0 >> 1);
        let (c, d) = (o.0 & 1, o.0 >> 1);
        let re = (a & c) ^ (b & d);
        let w = (a & d) ^ (b & c) ^ (b & d);
        F4(re | w << 1)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w+1"][self.0 as usize])
    }
}

impl FromStr for F4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<F4> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.trim_start_matches('(').trim_end_matches(')') {
            "0" => Ok(F4::ZERO),
            "1" => Ok(F4::ONE),
            "w" => Ok(F4::W),
            "w+1" | "1+w" => Ok(F4::W1),
            _ => Err(Error::Syntax { pos: 0, msg: format!("invalid F4 element `{s}`") }),
        }
    }
}

/// A nonnegative rational with a power-of-two denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic(BigRational);

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic(BigRational::zero())
    }

    pub fn int(n: u64) -> Dyadic {
        Dyadic(BigRational::from_integer(n.into()))
    }

    /// `num / 2^kexp`.
    pub fn new(num: u64, kexp: u32) -> Dyadic {
        Dyadic(BigRational::new(num.into(), BigInt::one() << kexp))
    }

    pub fn from_rational(q: BigRational) -> Result<Dyadic> {
        let d = q.denom();
        if q.is_negative() {
            return Err(Error::InvalidDescriptor(format!("exponent {q} is negative")));
        }
        if (d & (d - BigInt::one())) != BigInt::zero() {
            return Err(Error::InvalidDescriptor(format!("exponent {q} is not dyadic")));
        }
        Ok(Dyadic(q))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// The `k` in the reduced denominator `2^k`.
    pub fn kexp(&self) -> u32 {
        self.0.denom().trailing_zeros().unwrap_or(0) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn half(&self) -> Dyadic {
        Dyadic(&self.0 / BigRational::from_integer(2.into()))
    }

    pub fn double(&self) -> Dyadic {
        Dyadic(&self.0 * BigRational::from_integer(2.into()))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, o: &Dyadic) -> Dyadic {
        Dyadic(&self.0 + &o.0)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Dyadic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dyadic> {
        Dyadic::from_rational(parse_rational(s)?)
    }
}

impl Serialize for Dyadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(u64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Dyadic::int(n)),
        }
    }
}
