//! Quasi-quadratic `A`-modules in `A = R + X·C[[X]]`.
//!
//! A nonzero module is determined by its level cones `M_g`, the sets of
//! pseudo-angular components of its elements of valuation `g`. Levels below
//! the minimum `m` are zero and levels from `m + 2` on are the whole plane,
//! so the triple `(m, M_m, M_{m+1})` is a complete normal form.

mod family;
mod generators;
mod lattice;
mod psi;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Condition, Error, Result};
use crate::gauss_series::{Series, Valuation};
use crate::plane_cones::Cone;

pub use family::{rho, sigma, LevelFamily};
pub use generators::{four_squares_rational, square_class_decompose, Decomposition, SquareClassForm};
pub use psi::{decompose_check, psi_classify, psi_union_member, DecomposeReport, PsiClass};

/// Validated `(m, M_m, M_{m+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Levels {
    m: u32,
    lead: Cone,
    next: Cone,
}

impl Levels {
    pub fn m(&self) -> u32 {
        self.m
    }
    /// `M_m`.
    pub fn lead(&self) -> Cone {
        self.lead
    }
    /// `M_{m+1}`.
    pub fn next(&self) -> Cone {
        self.next
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QQModule {
    Zero,
    Levels(Levels),
}

impl QQModule {
    /// Checks the normal-form conditions and builds the module.
    pub fn validate(m: u32, lead: Cone, next: Cone) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::InvalidModule(Condition::ZeroLeading));
        }
        if m == 0 && lead.restrict_real() != lead {
            return Err(Error::InvalidModule(Condition::RealAtZero));
        }
        if lead.is_symmetric() && next != Cone::Full {
            return Err(Error::InvalidModule(Condition::SymmetricFull));
        }
        Ok(QQModule::Levels(Levels { m, lead, next }))
    }

    /// `X^k·C[[X]]` for `k ≥ 1`, or `A` itself for `k = 0`.
    pub fn power_ideal(k: u32) -> Self {
        let lead = if k == 0 { Cone::line(crate::Direction::E1) } else { Cone::Full };
        QQModule::validate(k, lead, Cone::Full).expect("ideal normal form")
    }

    pub fn min_level(&self) -> Option<u32> {
        match self {
            QQModule::Zero => None,
            QQModule::Levels(l) => Some(l.m),
        }
    }

    /// The level cone `M_g`.
    pub fn level(&self, g: u32) -> Cone {
        match self {
            QQModule::Zero => Cone::Zero,
            QQModule::Levels(l) => match g {
                g if g < l.m => Cone::Zero,
                g if g == l.m => l.lead,
                g if g == l.m + 1 => l.next,
                _ => Cone::Full,
            },
        }
    }

    /// Decides `x ∈ M`. A series with no known nonzero coefficient is
    /// accepted when its precision already reaches the full levels, and
    /// treated as zero by the zero module.
    pub fn member(&self, x: &Series) -> Result<bool> {
        x.require_in_a()?;
        let l = match self {
            QQModule::Zero => return Ok(x.is_zero_known()),
            QQModule::Levels(l) => l,
        };
        match x.val() {
            Valuation::AtLeast(n) if n >= l.m + 2 => Ok(true),
            Valuation::AtLeast(n) => Err(Error::Precision { needed: l.m + 2, have: n }),
            Valuation::Finite(v) => {
                let p = x.pan()?;
                Ok(match v {
                    v if v < l.m => false,
                    v if v == l.m => l.lead.contains(&p),
                    v if v == l.m + 1 => l.next.contains(&p),
                    _ => true,
                })
            }
        }
    }

    /// `{-x : x ∈ M}`.
    pub fn negate(&self) -> Self {
        match *self {
            QQModule::Zero => QQModule::Zero,
            QQModule::Levels(l) => QQModule::Levels(Levels { m: l.m, lead: l.lead.negate(), next: l.next.negate() }),
        }
    }

    /// Parses JSON, or the compact text form `levels(m; lead; next)` / `zero`.
    pub fn parse_any(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            // Validate outside serde so the violated condition keeps its error code.
            match serde_json::from_str::<ModuleRepr>(t)? {
                ModuleRepr::Zero => Ok(QQModule::Zero),
                ModuleRepr::Levels { m, lead, next } => QQModule::validate(m, lead, next),
            }
        } else {
            t.parse()
        }
    }
}

impl fmt::Display for QQModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QQModule::Zero => f.write_str("zero"),
            QQModule::Levels(l) => write!(f, "levels({}; {}; {})", l.m, l.lead, l.next),
        }
    }
}

impl FromStr for QQModule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "zero" {
            return Ok(QQModule::Zero);
        }
        let body = t
            .strip_prefix("levels(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax { pos: 0, msg: format!("unknown module `{s}`") })?;
        let bad = |msg: &str| Error::Syntax { pos: 0, msg: msg.into() };
        let (m, rest) = body.split_once(';').ok_or_else(|| bad("expected `levels(m; lead; next)`"))?;
        let cones = split_cones(rest);
        let [lead, next] = cones.as_slice() else {
            return Err(bad("expected two cones after the level"));
        };
        let m: u32 = m.trim().parse().map_err(|_| bad("invalid level"))?;
        QQModule::validate(m, lead.parse()?, next.parse()?)
    }
}

/// Splits `cone;cone` where a cone may itself be `fan[..](a;b)`.
fn split_cones(s: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().expect("nonempty").push(ch);
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum ModuleRepr {
    Zero,
    Levels {
        m: u32,
        #[serde(rename = "Mm")]
        lead: Cone,
        #[serde(rename = "Mm1")]
        next: Cone,
    },
}

impl Serialize for QQModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            QQModule::Zero => ModuleRepr::Zero,
            QQModule::Levels(l) => ModuleRepr::Levels { m: l.m, lead: l.lead, next: l.next },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QQModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ModuleRepr::deserialize(d)? {
            ModuleRepr::Zero => Ok(QQModule::Zero),
            ModuleRepr::Levels { m, lead, next } => QQModule::validate(m, lead, next).map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests;
