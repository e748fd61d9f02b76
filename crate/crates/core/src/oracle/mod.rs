//! Independent checks of the normal forms: seeded sampling of closures and
//! members, constructive realization searches, exhaustive enumeration over
//! `F4`, and the suites that tie them together.

mod catalog;
mod realize;
mod sample;
mod suites;
#[cfg(test)]
mod tests;

use std::fmt;

use serde::Serialize;

use crate::char2_hahn::F4;
use crate::char2_modules::F4Submodule;
use crate::gauss_series::Series;

pub use catalog::{char2_catalog, char2_cuts, cone_catalog, module_catalog};
pub use realize::{bounded_realization_search, split_sum_member, Realization, RealizationTerm, SplitRule, SumSplit};
pub use sample::{batch_seed, cone_points, splitmix64, SampleConfig, Sampler};
pub use suites::{axiom_pairs, run_suite, SuiteReport, SUITES};

/// `Σ aᵢ²·sᵢ` with `n ≤ max_summands` random summands and random `aᵢ ∈ A`.
pub fn sample_closure_element(gens: &[Series], cfg: &SampleConfig, rng: &mut Sampler) -> Series {
    let n = 1 + rng.below(cfg.max_summands);
    let mut acc: Option<Series> = None;
    for _ in 0..n {
        let s = rng.pick(gens);
        let a = rng.a_element(cfg.precision);
        let t = &a.square() * s;
        acc = Some(match acc {
            None => t,
            Some(x) => &x + &t,
        });
    }
    acc.unwrap_or_else(|| Series::zero(cfg.precision))
}

/// `cfg.count` closure samples from one seeded stream.
pub fn sample_closure_elements(gens: &[Series], cfg: &SampleConfig) -> Vec<Series> {
    let mut rng = Sampler::new(cfg.seed, cfg.coeff_height);
    (0..cfg.count).map(|_| sample_closure_element(gens, cfg, &mut rng)).collect()
}

/// Subsets of `F4` containing 0 and closed under addition (closure under
/// multiplication by squares of `F2` is automatic).
pub fn enumerate_f4_submodules() -> Vec<F4Submodule> {
    (0u8..16)
        .filter(|mask| {
            let elems: Vec<F4> = F4::ALL.into_iter().filter(|e| mask >> e.code() & 1 == 1).collect();
            let closed = elems.iter().all(|&a| {
                elems.iter().all(|&b| elems.contains(&(a + b)))
                    && [F4::ZERO, F4::ONE].iter().all(|&r| elems.contains(&(r * r * a)))
            });
            mask & 1 == 1 && closed
        })
        .map(|mask| F4Submodule::from_mask(mask).expect("closed subsets are subgroups"))
        .collect()
}

/// Agreement of two membership predicates on a sample list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub seed: u64,
}

impl EquivReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs both predicates on every sample. A predicate returning `None` marks
/// the sample as undecided; each disagreement is recorded with its input.
pub fn set_equiv_report<T: fmt::Display>(
    pred_a: impl Fn(&T) -> Option<bool>,
    pred_b: impl Fn(&T) -> Option<bool>,
    samples: &[T],
    seed: u64,
) -> EquivReport {
    let mut r = EquivReport { checked: 0, skipped: 0, failures: vec![], seed };
    for x in samples {
        match (pred_a(x), pred_b(x)) {
            (Some(a), Some(b)) => {
                r.checked += 1;
                if a != b {
                    r.failures.push(format!("{x}: first = {a}, second = {b}"));
                }
            }
            _ => r.skipped += 1,
        }
    }
    r
}
