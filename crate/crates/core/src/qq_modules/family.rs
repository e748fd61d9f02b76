//! The bijection between modules and admissible families of level cones.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::QQModule;
use crate::error::{Condition, Error, Result};
use crate::plane_cones::Cone;

/// Level cones `(g, M_g)` for an explicit window, with every later level equal to `beyond`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelFamily {
    pub levels: Vec<(u32, Cone)>,
    pub beyond: Cone,
}

impl LevelFamily {
    pub fn level(&self, g: u32) -> Cone {
        match self.levels.iter().find(|(h, _)| *h == g) {
            Some((_, c)) => *c,
            None if self.levels.iter().all(|(h, _)| *h < g) => self.beyond,
            None => Cone::Zero,
        }
    }
}

/// `σ(M)`: the levels `0..=m+2`, everything later being full.
pub fn sigma(module: &QQModule) -> LevelFamily {
    match module.min_level() {
        None => LevelFamily { levels: vec![], beyond: Cone::Zero },
        Some(m) => LevelFamily { levels: (0..=m + 2).map(|g| (g, module.level(g))).collect(), beyond: Cone::Full },
    }
}

fn violation(c: Condition, g: u32) -> Error {
    Error::InvalidFamily(format!("{c} (at level {g})"))
}

/// `ρ`: the module whose level cones are the given ones.
///
/// Levels not listed are filled with the least admissible choice: zero below
/// the first nonzero level, full from two levels above it, and at the level
/// right above it full exactly when the first nonzero level holds some `±u`.
pub fn rho(entries: &[(u32, Cone)]) -> Result<QQModule> {
    let mut explicit = BTreeMap::new();
    for (g, c) in entries {
        if explicit.insert(*g, *c).is_some() {
            return Err(Error::InvalidFamily(format!("level {g} given twice")));
        }
    }
    let Some(m) = explicit.iter().find(|(_, c)| !c.is_zero()).map(|(g, _)| *g) else {
        return Ok(QQModule::Zero);
    };
    let lead = explicit[&m];
    let level = |g: u32| -> Cone {
        match explicit.get(&g) {
            Some(c) => *c,
            None if g < m => Cone::Zero,
            None if g == m + 1 && !lead.is_symmetric() => Cone::Zero,
            None => Cone::Full,
        }
    };
    let top = explicit.keys().next_back().copied().unwrap_or(0).max(m + 2);
    if level(0).restrict_real() != level(0) {
        return Err(violation(Condition::RealAtZero, 0));
    }
    for g in m..=top {
        let c = level(g);
        if c.is_zero() {
            continue;
        }
        for h in g + 1..=top {
            let ch = level(h);
            if h % 2 == g % 2 && ch != c.cl_full() {
                return Err(violation(Condition::ParityFull, h));
            }
            if c.is_symmetric() && ch != Cone::Full {
                return Err(violation(Condition::SymmetricFull, h));
            }
        }
    }
    QQModule::validate(m, lead, level(m + 1))
}

impl LevelFamily {
    /// `ρ` applied to a whole family, including its tail.
    pub fn to_module(&self) -> Result<QQModule> {
        match self.beyond {
            Cone::Full if self.levels.iter().all(|(_, c)| c.is_zero()) => {
                // Everything past the window is full: the ideal just above it.
                match self.levels.iter().map(|(g, _)| g + 1).max() {
                    Some(k) if k > 0 => Ok(QQModule::power_ideal(k)),
                    _ => Err(violation(Condition::RealAtZero, 0)),
                }
            }
            Cone::Full => rho(&self.levels),
            Cone::Zero if self.levels.iter().all(|(_, c)| c.is_zero()) => Ok(QQModule::Zero),
            Cone::Zero => Err(Error::InvalidFamily(format!("{}: the tail must be full", Condition::ParityFull))),
            other => Err(Error::InvalidFamily(format!("tail must be zero or full, got {other}"))),
        }
    }
}
