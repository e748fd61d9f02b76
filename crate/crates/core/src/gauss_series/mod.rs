//! Truncated power series over the Gaussian rationals.
//!
//! A [`Series`] knows its coefficients for exponents strictly below its
//! precision `N`; everything at or above `N` is unknown. Arithmetic
//! propagates the worst-case precision so no answer ever depends on an
//! unknown coefficient.
//!
//! The ring `A` is the set of series whose constant term is real.

mod gauss;
mod parse;
mod witness;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gauss::GaussRat;
#[allow(unused_imports)]
pub(crate) use gauss::{parse_rational, ratio};
pub use parse::parse_series;
pub use witness::{mixed_square_witness, pan_axiom_report, sqrt_strict_unit, square_witness, AxiomCheck, AxiomReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum Valuation {
    Finite(u32),
    /// Every known coefficient vanishes; the true valuation is at least this.
    AtLeast(u32),
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(n) => Some(n),
            Valuation::AtLeast(_) => None,
        }
    }

    pub fn lower_bound(self) -> u32 {
        match self {
            Valuation::Finite(n) | Valuation::AtLeast(n) => n,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr")]
pub struct Series {
    coeffs: BTreeMap<u32, GaussRat>,
    precision: u32,
}

#[derive(Deserialize)]
struct SeriesRepr {
    coeffs: BTreeMap<u32, GaussRat>,
    precision: u32,
}

impl TryFrom<SeriesRepr> for Series {
    type Error = Error;
    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.precision == 0 {
            return Err(Error::Json("precision must be at least 1".into()));
        }
        if let Some((&k, _)) = r.coeffs.iter().next_back() {
            if k >= r.precision {
                return Err(Error::Json(format!("exponent {k} not below precision {}", r.precision)));
            }
        }
        Ok(Series::from_terms(r.coeffs, r.precision))
    }
}

impl Series {
    /// Builds a series from `(exponent, coefficient)` pairs. Repeated exponents
    /// add up, zero coefficients are dropped and terms at or above `precision`
    /// are truncated away. Panics if `precision` is 0.
    pub fn from_terms<I: IntoIterator<Item = (u32, GaussRat)>>(terms: I, precision: u32) -> Self {
        assert!(precision >= 1, "series precision must be at least 1");
        let mut coeffs: BTreeMap<u32, GaussRat> = BTreeMap::new();
        for (k, c) in terms {
            if k < precision {
                *coeffs.entry(k).or_default() += &c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Series { coeffs, precision }
    }

    pub fn zero(precision: u32) -> Self {
        Series::from_terms([], precision)
    }

    pub fn constant(c: GaussRat, precision: u32) -> Self {
        Series::from_terms([(0, c)], precision)
    }

    pub fn one(precision: u32) -> Self {
        Series::constant(GaussRat::one(), precision)
    }

    /// `c·X^k`.
    pub fn monomial(c: GaussRat, k: u32, precision: u32) -> Self {
        Series::from_terms([(k, c)], precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Coefficient of `X^k`; zero when absent (including at unknown exponents).
    pub fn coeff(&self, k: u32) -> GaussRat {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&u32, &GaussRat)> {
        self.coeffs.iter()
    }

    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn val(&self) -> Valuation {
        match self.coeffs.keys().next() {
            Some(&n) => Valuation::Finite(n),
            None => Valuation::AtLeast(self.precision),
        }
    }

    /// Valuation, or an error when every known coefficient vanishes.
    pub fn finite_val(&self) -> Result<u32> {
        self.val().finite().ok_or(Error::UndefinedValuation(self.precision))
    }

    /// Pseudo-angular component: the coefficient at the valuation exponent.
    pub fn pan(&self) -> Result<GaussRat> {
        self.coeffs.values().next().cloned().ok_or(Error::UndefinedValuation(self.precision))
    }

    pub fn in_a(&self) -> bool {
        self.coeff(0).is_real()
    }

    pub fn require_in_a(&self) -> Result<()> {
        if self.in_a() {
            Ok(())
        } else {
            Err(Error::NotInA(self.coeff(0).to_string()))
        }
    }

    /// Lowers the precision to `min(self.precision, precision)`.
    pub fn truncate(&self, precision: u32) -> Self {
        let p = self.precision.min(precision);
        Series::from_terms(self.coeffs.range(..p).map(|(k, c)| (*k, c.clone())), p)
    }

    /// Multiplication by `X^k`; the precision moves up by `k` as well.
    pub fn shift_up(&self, k: u32) -> Self {
        Series { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(), precision: self.precision + k }
    }

    /// Division by `X^k`. Needs every known coefficient below `k` to vanish
    /// and at least one known coefficient left afterwards.
    pub fn shift_down(&self, k: u32) -> Result<Self> {
        if self.coeffs.range(..k).next().is_some() {
            return Err(Error::NegativeValuation);
        }
        if self.precision <= k {
            return Err(Error::Precision { needed: k + 1, have: self.precision });
        }
        Ok(Series {
            coeffs: self.coeffs.iter().map(|(e, c)| (e - k, c.clone())).collect(),
            precision: self.precision - k,
        })
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        Series::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v * c)), self.precision)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact quotient `self / rhs`, defined when it has no negative exponents.
    pub fn checked_div(&self, rhs: &Series) -> Result<Series> {
        let vb = rhs.val().finite().ok_or(Error::DivisionByZero)?;
        match self.val() {
            Valuation::Finite(va) if va < vb => return Err(Error::NegativeValuation),
            Valuation::AtLeast(n) if n < vb => {
                return Err(Error::Precision { needed: vb + 1, have: n });
            }
            _ => {}
        }
        let num = self.shift_down(vb)?;
        let den = rhs.shift_down(vb)?;
        Ok(&num * &den.unit_inverse()?)
    }

    /// Inverse of a series with nonzero constant term.
    fn unit_inverse(&self) -> Result<Series> {
        let c0 = self.coeff(0);
        let inv0 = c0.inv()?;
        let n = self.precision;
        let mut out: Vec<GaussRat> = Vec::with_capacity(n as usize);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = GaussRat::zero();
            for (&j, c) in self.coeffs.range(1..=k) {
                acc += &(c * &out[(k - j) as usize]);
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Series::from_terms(out.into_iter().enumerate().map(|(k, c)| (k as u32, c)), n))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("series serializes")
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let p = self.precision.min(rhs.precision);
        Series::from_terms(self.coeffs.iter().chain(rhs.coeffs.iter()).map(|(k, c)| (*k, c.clone())), p)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(), precision: self.precision }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let va = self.val().lower_bound();
        let vb = rhs.val().lower_bound();
        let p = (self.precision + vb).min(rhs.precision + va);
        let mut acc: BTreeMap<u32, GaussRat> = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in rhs.coeffs.range(..p.saturating_sub(*i)) {
                *acc.entry(i + j).or_default() += &(a * b);
            }
        }
        Series::from_terms(acc, p)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series { (&self).$m(&rhs) }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_series(self))
    }
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_series(s, None)
    }
}
