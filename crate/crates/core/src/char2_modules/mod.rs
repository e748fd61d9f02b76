//! Quasi-quadratic modules in the characteristic-two model, classified by a
//! final segment of valuations and, when the segment has a minimum, the set
//! of components allowed at that minimum.

mod serial;
#[cfg(test)]
mod tests;

use std::cmp::Ordering;
use std::fmt;

use crate::char2_hahn::{Descriptor, Dyadic, F4};
use crate::error::{Error, Result};

pub use serial::Classifier;

/// A final segment of `[0, ∞) ∩ Z[1/2]`, given by its cut point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FinalSegment {
    Empty,
    From { cut: Dyadic, inclusive: bool },
}

impl FinalSegment {
    pub fn from(cut: Dyadic, inclusive: bool) -> FinalSegment {
        FinalSegment::From { cut, inclusive }
    }

    pub fn contains(&self, g: &Dyadic) -> bool {
        match self {
            FinalSegment::Empty => false,
            FinalSegment::From { cut, inclusive } => g > cut || (g == cut && *inclusive),
        }
    }

    pub fn minimum(&self) -> Option<&Dyadic> {
        match self {
            FinalSegment::From { cut, inclusive: true } => Some(cut),
            _ => None,
        }
    }

    /// Everything strictly above the minimum.
    fn above(cut: &Dyadic) -> FinalSegment {
        FinalSegment::from(cut.clone(), false)
    }
}

/// Ordered by inclusion, which is total.
impl Ord for FinalSegment {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (FinalSegment::Empty, FinalSegment::Empty) => Ordering::Equal,
            (FinalSegment::Empty, _) => Ordering::Less,
            (_, FinalSegment::Empty) => Ordering::Greater,
            (FinalSegment::From { cut: a, inclusive: ia }, FinalSegment::From { cut: b, inclusive: ib }) => {
                b.cmp(a).then(ia.cmp(ib))
            }
        }
    }
}

impl PartialOrd for FinalSegment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// `Less` means a strict subset.
pub fn seg_compare(a: &FinalSegment, b: &FinalSegment) -> Ordering {
    a.cmp(b)
}

/// An additive subgroup of `F4`, as a bitmask indexed by element codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4Submodule(u8);

impl F4Submodule {
    pub const ZERO: F4Submodule = F4Submodule(0b0001);
    pub const F2: F4Submodule = F4Submodule(0b0011);
    pub const W: F4Submodule = F4Submodule(0b0101);
    pub const W1: F4Submodule = F4Submodule(0b1001);
    pub const FULL: F4Submodule = F4Submodule(0b1111);
    pub const ALL: [F4Submodule; 5] =
        [F4Submodule::ZERO, F4Submodule::F2, F4Submodule::W, F4Submodule::W1, F4Submodule::FULL];

    pub fn from_mask(mask: u8) -> Result<F4Submodule> {
        F4Submodule::ALL
            .into_iter()
            .find(|m| m.0 == mask)
            .ok_or_else(|| Error::InvalidSubmodule(format!("mask {mask:#06b} is not an additive subgroup of F4")))
    }

    pub fn from_elems(elems: &[F4]) -> Result<F4Submodule> {
        F4Submodule::from_mask(elems.iter().fold(0, |m, e| m | 1 << e.code()))
    }

    /// The additive span of `elems`.
    pub fn span(elems: impl IntoIterator<Item = F4>) -> F4Submodule {
        elems.into_iter().fold(F4Submodule::ZERO, |m, e| m.sum(F4Submodule::from_elem(e)))
    }

    fn from_elem(e: F4) -> F4Submodule {
        F4Submodule(1 | 1 << e.code())
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, e: F4) -> bool {
        self.0 >> e.code() & 1 == 1
    }

    pub fn elems(self) -> Vec<F4> {
        F4::ALL.into_iter().filter(|&e| self.contains(e)).collect()
    }

    pub fn is_zero(self) -> bool {
        self == F4Submodule::ZERO
    }

    pub fn intersect(self, o: F4Submodule) -> F4Submodule {
        F4Submodule(self.0 & o.0)
    }

    pub fn sum(self, o: F4Submodule) -> F4Submodule {
        if self.0 & o.0 == o.0 {
            self
        } else if self.0 & o.0 == self.0 {
            o
        } else {
            F4Submodule::FULL
        }
    }
}

impl fmt::Display for F4Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems().iter().map(F4::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The level set at the minimum of a segment with a minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Delta2 {
    cut: Dyadic,
    level: F4Submodule,
}

impl Delta2 {
    pub fn cut(&self) -> &Dyadic {
        &self.cut
    }

    pub fn level(&self) -> F4Submodule {
        self.level
    }

    pub fn segment(&self) -> FinalSegment {
        FinalSegment::from(self.cut.clone(), true)
    }
}

/// `D1(S)`: all nonzero elements with valuation in `S`. `D2(S, M)`: valuation
/// above `min S`, or equal to it with component in `M`.
///
/// Stored canonically: `D2` is kept only when it differs from every `D1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Char2Module {
    D1(FinalSegment),
    D2(Delta2),
}

/// Components available at the minimum of a segment with that minimum.
fn residues_at(cut: &Dyadic) -> F4Submodule {
    if cut.is_zero() {
        F4Submodule::F2
    } else {
        F4Submodule::FULL
    }
}

impl Char2Module {
    pub fn zero() -> Char2Module {
        Char2Module::D1(FinalSegment::Empty)
    }

    pub fn d1(seg: FinalSegment) -> Char2Module {
        Char2Module::D1(seg)
    }

    /// Canonical `Δ₂(From(cut, true), level)`.
    pub fn d2(cut: Dyadic, level: F4Submodule) -> Result<Char2Module> {
        if level.is_zero() {
            return Err(Error::InvalidSubmodule("the level set at the minimum must be nonzero".into()));
        }
        let avail = residues_at(&cut);
        if level.intersect(avail) != level {
            return Err(Error::InvalidSubmodule(format!("at valuation 0 the level set must lie in F2, got {level}")));
        }
        if level == avail {
            Ok(Char2Module::D1(FinalSegment::from(cut, true)))
        } else {
            Ok(Char2Module::D2(Delta2 { cut, level }))
        }
    }

    pub fn segment(&self) -> FinalSegment {
        match self {
            Char2Module::D1(s) => s.clone(),
            Char2Module::D2(d) => d.segment(),
        }
    }

    /// The components at `min S`, when `S` has a minimum.
    pub fn level_at_min(&self) -> Option<F4Submodule> {
        match self {
            Char2Module::D1(s) => s.minimum().map(residues_at),
            Char2Module::D2(d) => Some(d.level),
        }
    }

    pub fn member(&self, d: &Descriptor) -> bool {
        let Some(v) = d.v() else {
            return true;
        };
        match self {
            Char2Module::D1(s) => s.contains(v),
            Char2Module::D2(m) => v > &m.cut || (v == &m.cut && m.level.contains(d.p())),
        }
    }

    pub fn intersect(&self, o: &Char2Module) -> Char2Module {
        let (s1, s2) = (self.segment(), o.segment());
        match s1.cmp(&s2) {
            Ordering::Less => self.clone(),
            Ordering::Greater => o.clone(),
            Ordering::Equal => match (s1.minimum(), self.level_at_min(), o.level_at_min()) {
                (Some(cut), Some(a), Some(b)) => {
                    let level = a.intersect(b);
                    if level.is_zero() {
                        Char2Module::D1(FinalSegment::above(cut))
                    } else {
                        Char2Module::d2(cut.clone(), level).expect("a nonzero subgroup of an admissible level")
                    }
                }
                _ => self.clone(),
            },
        }
    }

    pub fn sum(&self, o: &Char2Module) -> Char2Module {
        let (s1, s2) = (self.segment(), o.segment());
        match s1.cmp(&s2) {
            Ordering::Less => o.clone(),
            Ordering::Greater => self.clone(),
            Ordering::Equal => match (s1.minimum(), self.level_at_min(), o.level_at_min()) {
                (Some(cut), Some(a), Some(b)) => {
                    Char2Module::d2(cut.clone(), a.sum(b)).expect("the sum of admissible levels is admissible")
                }
                _ => self.clone(),
            },
        }
    }

    /// Smallest module containing elements with the given descriptors.
    pub fn from_generators(ds: &[Descriptor]) -> Result<Char2Module> {
        for d in ds {
            if !d.in_a() {
                return Err(Error::NotInA(format!("{d} has valuation 0 and a component outside F2")));
            }
        }
        let Some(g) = ds.iter().filter_map(Descriptor::v).min() else {
            return Ok(Char2Module::zero());
        };
        let level = F4Submodule::span(ds.iter().filter(|d| d.v() == Some(g)).map(Descriptor::p));
        Char2Module::d2(g.clone(), level)
    }

    /// `Φ`: the segment, together with the level at its minimum when it has one.
    pub fn phi(&self) -> Classifier {
        Classifier { segment: self.segment(), level: self.level_at_min() }
    }

    /// `Ψ`, the inverse of `Φ`.
    pub fn psi(c: &Classifier) -> Result<Char2Module> {
        match (c.segment.minimum(), c.level) {
            (None, None) => Ok(Char2Module::D1(c.segment.clone())),
            (None, Some(_)) => {
                Err(Error::InvalidClassifier(format!("segment {} has no minimum to carry a level", c.segment)))
            }
            (Some(_), None) => Err(Error::InvalidClassifier(format!("segment {} needs a level", c.segment))),
            (Some(cut), Some(level)) => Char2Module::d2(cut.clone(), level).map_err(|e| match e {
                Error::InvalidSubmodule(msg) => Error::InvalidClassifier(msg),
                e => e,
            }),
        }
    }
}

impl fmt::Display for FinalSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinalSegment::Empty => f.write_str("empty"),
            FinalSegment::From { cut, inclusive: true } => write!(f, "[{cut},inf)"),
            FinalSegment::From { cut, inclusive: false } => write!(f, "({cut},inf)"),
        }
    }
}

impl fmt::Display for Char2Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Char2Module::D1(s) => write!(f, "d1({s})"),
            Char2Module::D2(d) => write!(f, "d2({}; {})", d.segment(), d.level),
        }
    }
}

/// Every distinct module whose cut lies in `cuts`, plus the zero module.
pub fn catalog(cuts: &[Dyadic]) -> Vec<Char2Module> {
    let mut out = vec![Char2Module::zero()];
    for cut in cuts {
        out.push(Char2Module::D1(FinalSegment::above(cut)));
        for level in F4Submodule::ALL {
            if let Ok(m) = Char2Module::d2(cut.clone(), level) {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
    }
    out
}
