//! Intersection, sum, symmetric part and the ideal test.

use super::QQModule;
use crate::plane_cones::Cone;

/// Normal form of the module with level cones `level(g)`, where every level
/// past `horizon` is full and the family is admissible.
fn from_levels(level: impl Fn(u32) -> Cone, horizon: u32) -> QQModule {
    match (0..=horizon).find(|&g| !level(g).is_zero()) {
        Some(m) => {
            QQModule::validate(m, level(m), level(m + 1)).expect("lattice operations preserve admissible families")
        }
        None => QQModule::Zero,
    }
}

impl QQModule {
    /// Levelwise intersection.
    pub fn intersect(&self, other: &QQModule) -> QQModule {
        let (Some(m1), Some(m2)) = (self.min_level(), other.min_level()) else {
            return QQModule::Zero;
        };
        from_levels(|g| self.level(g).intersect(&other.level(g)), m1.max(m2) + 3)
    }

    /// Sum `{x + y}`. Level `g` is full as soon as some lower level `h` has a
    /// nonzero `p ∈ M₁,h` with `-p ∈ M₂,h`; otherwise it is the sum of cones.
    pub fn sum(&self, other: &QQModule) -> QQModule {
        let (Some(m1), Some(m2)) = (self.min_level(), other.min_level()) else {
            return if self.min_level().is_some() { *self } else { *other };
        };
        let horizon = m1.max(m2) + 3;
        let cancels: Vec<bool> =
            (0..=horizon).map(|h| !self.level(h).intersect(&other.level(h).negate()).is_zero()).collect();
        from_levels(
            |g| {
                if cancels[..g.min(horizon + 1) as usize].iter().any(|&c| c) {
                    Cone::Full
                } else {
                    self.level(g).sum(&other.level(g))
                }
            },
            horizon,
        )
    }

    /// `M ∩ (-M)`.
    pub fn symmetric_part(&self) -> QQModule {
        self.intersect(&self.negate())
    }

    /// Whether `M` is an ideal of `A`: the minimum level must be closed under
    /// negation (a line or the whole plane), which forces the next level full.
    pub fn is_ideal(&self) -> bool {
        match self {
            QQModule::Zero => true,
            QQModule::Levels(l) => matches!(l.lead(), Cone::Full | Cone::Line(_)),
        }
    }
}
