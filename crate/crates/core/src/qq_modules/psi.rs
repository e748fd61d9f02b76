//! The reconstruction sets `Ψ(M, g)` and the decomposition of a module into them.

use serde::Serialize;

use super::QQModule;
use crate::error::Result;
use crate::gauss_series::Series;
use crate::plane_cones::Cone;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiClass {
    /// The zero series, which belongs to every `Ψ(M, g)`.
    Zero,
    NotMember,
    InPsi1,
    InPsi2,
}

impl PsiClass {
    pub fn is_member(self) -> bool {
        self != PsiClass::NotMember
    }
}

/// Whether some `u ∈ A` of valuation `g` has both `±pan(u)` in `M`.
fn symmetric_at(m: &Cone, g: u32) -> bool {
    if g == 0 {
        // Elements of valuation 0 in A have real pseudo-angular components.
        m.restrict_real().is_symmetric()
    } else {
        m.is_symmetric()
    }
}

/// Classifies `x` against `Ψ₁(M, g)` (tested first) and `Ψ₂(M, g)`.
pub fn psi_classify(m: &Cone, g: u32, x: &Series) -> Result<PsiClass> {
    x.require_in_a()?;
    let Some(v) = x.val().finite() else {
        return Ok(PsiClass::Zero);
    };
    let p = x.pan()?;
    let psi1 = v % 2 == g % 2 && ((v == g && m.contains(&p)) || (v > g && !m.is_zero()));
    if psi1 {
        return Ok(PsiClass::InPsi1);
    }
    // A witness u with ±u ∈ Ψ₁ sits either at valuation g (needs a symmetric
    // level) or at g + 2, where the closure over C is already everything.
    let psi2 = (symmetric_at(m, g) && g < v) || (!m.is_zero() && g + 2 < v);
    Ok(if psi2 { PsiClass::InPsi2 } else { PsiClass::NotMember })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub checked: usize,
    /// Samples whose membership could not be decided at their precision.
    pub skipped: usize,
    pub disagreements: Vec<String>,
}

impl DecomposeReport {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Membership through the union of `Ψ(M_g, g)` over `g ∈ {m, m+1, m+2}`.
pub fn psi_union_member(module: &QQModule, x: &Series) -> Result<bool> {
    let Some(m) = module.min_level() else {
        x.require_in_a()?;
        return Ok(x.is_zero_known());
    };
    for g in m..=m + 2 {
        if psi_classify(&module.level(g), g, x)?.is_member() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Compares direct membership with the `Ψ`-union on every sample.
pub fn decompose_check(module: &QQModule, samples: &[Series]) -> DecomposeReport {
    let mut report = DecomposeReport { checked: 0, skipped: 0, disagreements: vec![] };
    for x in samples {
        match (module.member(x), psi_union_member(module, x)) {
            (Ok(a), Ok(b)) => {
                report.checked += 1;
                if a != b {
                    report.disagreements.push(format!("module {module}, x = {x}: member = {a}, psi-union = {b}"));
                }
            }
            _ => report.skipped += 1,
        }
    }
    report
}
