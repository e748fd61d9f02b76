//! Finitely supported series over `F4` with nonnegative dyadic exponents.
//!
//! Squaring is additive in characteristic two, so every element has a unique
//! square root computed termwise. The subring `A` consists of the series whose
//! constant term lies in `F2`.

mod field;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use field::{Dyadic, F4};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DyadicSeries {
    terms: BTreeMap<Dyadic, F4>,
}

/// `(val, pan)`; `v = None` marks the zero element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DescriptorRepr", into = "DescriptorRepr")]
pub struct Descriptor {
    v: Option<Dyadic>,
    p: F4,
}

#[derive(Serialize, Deserialize)]
struct DescriptorRepr {
    v: Option<Dyadic>,
    p: F4,
}

impl TryFrom<DescriptorRepr> for Descriptor {
    type Error = Error;
    fn try_from(r: DescriptorRepr) -> Result<Descriptor> {
        Descriptor::new(r.v, r.p)
    }
}

impl From<Descriptor> for DescriptorRepr {
    fn from(d: Descriptor) -> DescriptorRepr {
        DescriptorRepr { v: d.v, p: d.p }
    }
}

impl Descriptor {
    pub fn new(v: Option<Dyadic>, p: F4) -> Result<Descriptor> {
        if v.is_some() == p.is_zero() {
            return Err(Error::InvalidDescriptor(match v {
                Some(v) => format!("valuation {v} needs a nonzero component"),
                None => format!("the zero descriptor has component 0, got {p}"),
            }));
        }
        Ok(Descriptor { v, p })
    }

    pub fn zero() -> Descriptor {
        Descriptor { v: None, p: F4::ZERO }
    }

    pub fn finite(v: Dyadic, p: F4) -> Result<Descriptor> {
        Descriptor::new(Some(v), p)
    }

    pub fn v(&self) -> Option<&Dyadic> {
        self.v.as_ref()
    }

    pub fn p(&self) -> F4 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_none()
    }

    /// Describes an element of `A`: valuation 0 forces a component in `F2`.
    pub fn in_a(&self) -> bool {
        !self.v.as_ref().is_some_and(Dyadic::is_zero) || self.p.in_f2()
    }
}

impl FromStr for Descriptor {
    type Err = Error;
    /// `(v, p)` as printed, or `(inf, -)` / `inf` for zero.
    fn from_str(s: &str) -> Result<Descriptor> {
        let t = s.trim();
        let body = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let (v, p) = match body.split_once(',') {
            Some((v, p)) => (v.trim(), p.trim()),
            None => (body.trim(), ""),
        };
        if v == "inf" {
            return match p {
                "" | "-" | "0" => Ok(Descriptor::zero()),
                _ => Descriptor::new(None, p.parse()?),
            };
        }
        if p.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: format!("expected `(v, p)`, got `{s}`") });
        }
        Descriptor::new(Some(v.parse()?), p.parse()?)
    }
}

impl Descriptor {
    /// JSON or the text form.
    pub fn parse_any(text: &str) -> Result<Descriptor> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            text.parse()
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.v {
            None => f.write_str("(inf, -)"),
            Some(v) => write!(f, "({v}, {})", self.p),
        }
    }
}

impl DyadicSeries {
    pub fn zero() -> DyadicSeries {
        DyadicSeries::default()
    }

    pub fn one() -> DyadicSeries {
        DyadicSeries::monomial(F4::ONE, Dyadic::zero())
    }

    pub fn monomial(c: F4, e: Dyadic) -> DyadicSeries {
        DyadicSeries::from_terms([(e, c)])
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (Dyadic, F4)>) -> DyadicSeries {
        let mut map: BTreeMap<Dyadic, F4> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert(F4::ZERO);
            *slot = *slot + c;
        }
        map.retain(|_, c| !c.is_zero());
        DyadicSeries { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Dyadic, F4)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    #[allow(clippy::len_without_is_empty)] // `is_zero` plays that part
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Dyadic) -> F4 {
        self.terms.get(e).copied().unwrap_or(F4::ZERO)
    }

    /// The least-exponent term.
    pub fn val_pan(&self) -> Descriptor {
        match self.terms.iter().next() {
            Some((e, c)) => Descriptor { v: Some(e.clone()), p: *c },
            None => Descriptor::zero(),
        }
    }

    /// Constant term in `F2`.
    pub fn in_a(&self) -> bool {
        self.coeff(&Dyadic::zero()).in_f2()
    }

    /// Termwise: `(Σ cₑXᵉ)² = Σ cₑ²X²ᵉ`.
    pub fn square(&self) -> DyadicSeries {
        DyadicSeries { terms: self.terms.iter().map(|(e, c)| (e.double(), c.square())).collect() }
    }

    /// The unique `t` with `t² = self`.
    pub fn sqrt(&self) -> DyadicSeries {
        DyadicSeries { terms: self.terms.iter().map(|(e, c)| (e.half(), c.sqrt())).collect() }
    }

    pub fn scale(&self, c: F4) -> DyadicSeries {
        DyadicSeries::from_terms(self.terms.iter().map(|(e, d)| (e.clone(), c * *d)))
    }

    /// `X^k · self`.
    pub fn shift(&self, k: &Dyadic) -> DyadicSeries {
        DyadicSeries { terms: self.terms.iter().map(|(e, c)| (e + k, *c)).collect() }
    }
}

impl Add for &DyadicSeries {
    type Output = DyadicSeries;
    fn add(self, o: &DyadicSeries) -> DyadicSeries {
        DyadicSeries::from_terms(self.terms().chain(o.terms()).map(|(e, c)| (e.clone(), c)))
    }
}

impl Add for DyadicSeries {
    type Output = DyadicSeries;
    fn add(self, o: DyadicSeries) -> DyadicSeries {
        &self + &o
    }
}

impl Mul for &DyadicSeries {
    type Output = DyadicSeries;
    fn mul(self, o: &DyadicSeries) -> DyadicSeries {
        DyadicSeries::from_terms(self.terms().flat_map(|(e, c)| o.terms().map(move |(f, d)| (e + f, c * d))))
    }
}

impl Mul for DyadicSeries {
    type Output = DyadicSeries;
    fn mul(self, o: DyadicSeries) -> DyadicSeries {
        &self * &o
    }
}

/// `(u, v)` with `u² + v² = x`, namely `u = √(1 + x)` and `v = 1`, for `x` in
/// the maximal ideal.
pub fn two_squares(x: &DyadicSeries) -> Result<(DyadicSeries, DyadicSeries)> {
    if x.val_pan().v().is_some_and(Dyadic::is_zero) {
        return Err(Error::NotInMaximalIdeal(format!("{x} has a nonzero constant term")));
    }
    Ok(((&DyadicSeries::one() + x).sqrt(), DyadicSeries::one()))
}

impl fmt::Display for DyadicSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_dyadic_series(self))
    }
}

impl FromStr for DyadicSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<DyadicSeries> {
        parse::parse_dyadic_series(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    terms: BTreeMap<String, F4>,
}

impl Serialize for DyadicSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr { terms: self.terms.iter().map(|(e, c)| (e.to_string(), *c)).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DyadicSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeriesRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for (e, c) in r.terms {
            terms.push((e.parse::<Dyadic>().map_err(serde::de::Error::custom)?, c));
        }
        Ok(DyadicSeries::from_terms(terms))
    }
}

impl DyadicSeries {
    /// JSON or the text grammar.
    pub fn parse_any(text: &str) -> Result<DyadicSeries> {
        if text.trim_start().starts_with('{') {
            Ok(serde_json::from_str(text)?)
        } else {
            text.parse()
        }
    }
}
