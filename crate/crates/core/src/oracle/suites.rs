//! Named invariant suites. Each one is deterministic given its seed; the
//! optional count overrides the main per-item sample count.

use serde::Serialize;

use super::catalog::{char2_catalog, char2_cuts, module_catalog};
use super::realize::{bounded_realization_search, split_sum_member};
use super::sample::{SampleConfig, Sampler};
use super::{enumerate_f4_submodules, sample_closure_element, set_equiv_report};
use crate::char2_hahn::{two_squares, Descriptor, Dyadic, DyadicSeries, F4};
use crate::char2_modules::{Char2Module, Classifier, F4Submodule, FinalSegment};
use crate::error::{Error, Result};
use crate::gauss_series::{pan_axiom_report, GaussRat, Series};
use crate::qq_modules::{square_class_decompose, psi_union_member, rho, sigma, QQModule};

pub const SUITES: [&str; 8] = ["bijection", "decomp", "lattice", "fg", "axioms", "char2", "closure", "all"];

const MAX_RECORDED: usize = 25;

/// Members and scalars drawn per module before the closure suite combines them.
const POOL: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub checked: usize,
    pub skipped: usize,
    pub failed: usize,
    /// The first few failures, with enough detail to reproduce them.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str, seed: u64) -> SuiteReport {
        SuiteReport { name: name.into(), seed, checked: 0, skipped: 0, failed: 0, failures: vec![] }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(msg);
        }
    }

    /// Undecided outcomes count as skipped.
    fn record_opt(&mut self, ok: Option<bool>, what: impl FnOnce() -> String) {
        match ok {
            Some(ok) => self.record(ok, what),
            None => self.skipped += 1,
        }
    }
}

pub fn run_suite(name: &str, seed: u64, count: Option<usize>) -> Result<Vec<SuiteReport>> {
    Ok(match name {
        "bijection" => vec![bijection(seed)],
        "decomp" => vec![decomp(seed, count.unwrap_or(1000))],
        "lattice" => vec![lattice(seed, count.unwrap_or(1000))],
        "fg" => vec![fg(seed, count.unwrap_or(1000))],
        "axioms" => vec![axioms(seed, count.unwrap_or(10_000))],
        "char2" => vec![char2(seed, count.unwrap_or(1000))],
        "closure" => vec![closure(seed, count.unwrap_or(10_000))],
        "all" => {
            let mut out = vec![];
            for s in &SUITES[..SUITES.len() - 1] {
                out.extend(run_suite(s, seed, count)?);
            }
            out
        }
        other => return Err(Error::Limit(format!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")))),
    })
}

/// `ρ(σ(M)) = M` and `σ(ρ(F)) = F` over the module catalog.
fn bijection(seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("bijection", seed);
    let cat = module_catalog();
    if cat.len() < 200 {
        r.fail(format!("catalog has only {} modules", cat.len()));
    }
    for m in &cat {
        let fam = sigma(m);
        match fam.to_module() {
            Ok(back) => r.record(back == *m, || format!("rho(sigma({m})) = {back}")),
            Err(e) => r.record(false, || format!("rho(sigma({m})) failed: {e}")),
        }
        match rho(&fam.levels) {
            Ok(back) => r.record(sigma(&back) == fam, || format!("sigma(rho(sigma({m}))) differs")),
            Err(e) => r.record(false, || format!("rho on the levels of {m} failed: {e}")),
        }
    }
    r
}

/// Direct membership against the union of `Ψ(M_g, g)` over the first three levels.
fn decomp(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("decomp", seed);
    for (k, m) in module_catalog().iter().enumerate() {
        let mut rng = Sampler::for_batch(seed, k as u64, 5);
        let top = m.min_level().unwrap_or(0) + 4;
        let samples: Vec<Series> = (0..count).map(|_| rng.probe_series(top, 3)).collect();
        let rep = set_equiv_report(|x| m.member(x).ok(), |x| psi_union_member(m, x).ok(), &samples, seed);
        r.checked += rep.checked;
        r.skipped += rep.skipped;
        for f in rep.failures {
            r.fail(format!("module {m}: {f}"));
        }
    }
    r
}

/// A member of `m₂` that cancels the leading term of `x`, when `-x`'s leading
/// component lies in the level cone; otherwise a fresh member.
fn partner(rng: &mut Sampler, x: &Series, m2: &QQModule) -> Option<Series> {
    let v = x.val().finite()?;
    let neg = -&x.pan().ok()?;
    if m2.level(v).contains(&neg) {
        let w = v + 1 + rng.range_u32(0, 2);
        let p = rng.probe_point();
        let tail = rng.series_with(w, p, x.precision() + 1);
        Some(&(-x) + &tail)
    } else {
        rng.member(m2, 3)
    }
}

/// Intersections against conjunction, sums of members, and explicit splittings
/// of sampled members of sums, on 100 seeded catalog pairs.
fn lattice(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("lattice", seed);
    let cat = module_catalog();
    let mut pick = Sampler::new(seed, 5);
    for k in 0..100u64 {
        let (m1, m2) = (*pick.pick(&cat), *pick.pick(&cat));
        let (meet, join) = (m1.intersect(&m2), m1.sum(&m2));
        let mut rng = Sampler::for_batch(seed, k, 5);
        let top = m1.min_level().unwrap_or(0).max(m2.min_level().unwrap_or(0)) + 4;
        for _ in 0..count {
            let z = rng.probe_series(top, 3);
            let ok = (|| Some(meet.member(&z).ok()? == (m1.member(&z).ok()? && m2.member(&z).ok()?)))();
            r.record_opt(ok, || format!("({m1}) ∩ ({m2}) = {meet} at {z}"));
        }
        for _ in 0..count / 5 {
            let (Some(x), Some(y)) = (rng.member(&m1, 3), None::<Series>.or_else(|| rng.member(&m2, 3))) else {
                r.skipped += 1;
                continue;
            };
            let y = if rng.chance(0.5) { partner(&mut rng, &x, &m2).unwrap_or(y) } else { y };
            if !m2.member(&y).unwrap_or(false) {
                r.skipped += 1;
                continue;
            }
            let s = &x + &y;
            let ok = if s.is_zero_known() { Some(true) } else { join.member(&s).ok() };
            r.record_opt(ok, || format!("({m1}) + ({m2}) = {join} misses {x} + {y}"));
        }
        for _ in 0..100 {
            let Some(z) = rng.member(&join, 3) else { break };
            let split = split_sum_member(&z, &m1, &m2);
            r.record(split.is_some(), || format!("no splitting of {z} in ({m1}) + ({m2}) = {join}"));
        }
    }
    r
}

fn is_strict_submodule(a: &QQModule, b: &QQModule) -> bool {
    a != b && a.intersect(b) == *a
}

/// Generating sets of finitely generated modules, strict shrinking for the
/// others, and the rational decomposition of random series.
fn fg(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("fg", seed);
    let mut rng = Sampler::new(seed, 5);
    for m in module_catalog() {
        if m.is_fg() {
            let back = m.fg_generators().and_then(|g| QQModule::from_generators(&g));
            r.record(back.as_ref() == Ok(&m), || format!("{m} regenerates as {back:?}"));
        } else {
            for _ in 0..20 {
                let gens: Vec<Series> = (0..12).filter_map(|_| rng.member(&m, 2)).collect();
                match QQModule::from_generators(&gens) {
                    Ok(n) => r.record(is_strict_submodule(&n, &m), || format!("{m}: generators give {n}")),
                    Err(e) => r.record(false, || format!("{m}: {e}")),
                }
            }
        }
    }
    for _ in 0..count {
        let f = rng.probe_series(5, 5);
        let ok = square_class_decompose(&f).is_ok_and(|d| {
            d.expand() == f
                && d.s.in_a()
                && d.generator_terms().is_ok_and(|t| t.expand(f.precision()).truncate(f.precision()) == f)
        });
        r.record(ok, || format!("decomposition of {f}"));
    }
    r
}

/// Seeded pairs for the axiom checks. A quarter of them have equal valuations
/// and opposite leading coefficients, so cancellation is always exercised.
pub fn axiom_pairs(seed: u64, count: usize) -> Vec<(Series, Series)> {
    let mut rng = Sampler::new(seed, 6);
    (0..count)
        .map(|k| {
            let va = rng.range_u32(0, 4);
            let a = rng.random_series(va, 4);
            let b = match k % 4 {
                0 => {
                    let t = rng.random_series(va + 1, a.precision() - va);
                    &(-&a) + &t
                }
                1 => rng.random_series(va, 4),
                _ => {
                    let vb = rng.range_u32(0, 4);
                    rng.random_series(vb, 4)
                }
            };
            (a, b)
        })
        .collect()
}

/// The pseudo-angular component axioms on random pairs.
fn axioms(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("axioms", seed);
    let pairs = axiom_pairs(seed, count);
    let rep = pan_axiom_report(&pairs);
    r.skipped = rep.skipped;
    for c in &rep.checks {
        r.checked += c.applicable;
        if c.applicable == 0 {
            r.fail(format!("{} was never exercised", c.name));
        }
        for _ in 0..c.applicable - c.passed {
            r.fail(format!("{}: {}", c.name, c.first_failure.clone().unwrap_or_default()));
        }
    }
    r
}

fn descriptor_grid() -> Vec<Descriptor> {
    let mut out = vec![Descriptor::zero()];
    for n in 0..=24u64 {
        let v = Dyadic::new(n, 3);
        for p in &F4::ALL[1..] {
            let d = Descriptor::finite(v.clone(), *p).expect("nonzero component");
            if d.in_a() {
                out.push(d);
            }
        }
    }
    out
}

/// The characteristic-two classification, lattice laws and witnesses.
fn char2(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("char2", seed);
    let subs = enumerate_f4_submodules();
    r.record(subs == F4Submodule::ALL, || format!("enumeration gave {subs:?}"));

    let cat = char2_catalog();
    for m in &cat {
        let c = m.phi();
        r.record(Char2Module::psi(&c).as_ref() == Ok(m), || format!("psi(phi({m})) differs"));
    }
    let mut segs = vec![FinalSegment::Empty];
    for c in char2_cuts() {
        segs.push(FinalSegment::from(c.clone(), true));
        segs.push(FinalSegment::from(c, false));
    }
    let mut valid = 0;
    for s in &segs {
        for level in [None].into_iter().chain(F4Submodule::ALL.map(Some)) {
            let c = Classifier { segment: s.clone(), level };
            if let Ok(m) = Char2Module::psi(&c) {
                valid += 1;
                r.record(m.phi() == c, || format!("phi(psi({c:?})) = {:?}", m.phi()));
            }
        }
    }
    r.record(valid == cat.len(), || format!("{valid} classifiers for {} modules", cat.len()));

    let grid = descriptor_grid();
    for a in &cat {
        for b in &cat {
            let (i, s) = (a.intersect(b), a.sum(b));
            for d in &grid {
                r.record(i.member(d) == (a.member(d) && b.member(d)), || format!("{a} ∩ {b} = {i} at {d}"));
                r.record(s.member(d) || !(a.member(d) || b.member(d)), || format!("{a} + {b} = {s} at {d}"));
            }
        }
    }

    let mut rng = Sampler::new(seed, 5);
    for _ in 0..count {
        let x = rng.dyadic_maximal();
        let ok = two_squares(&x).is_ok_and(|(u, v)| &u.square() + &v.square() == x && u.in_a() && v.in_a());
        r.record(ok, || format!("two squares of {x}"));
    }
    for _ in 0..count {
        let m = rng.pick(&cat).clone();
        let x = rng.char2_member(&m);
        if x.is_zero() {
            r.skipped += 1;
            continue;
        }
        let q = rng.dyadic_maximal();
        if q.is_zero() {
            r.skipped += 1;
            continue;
        }
        let y = &q * &x;
        let ok = two_squares(&q).is_ok_and(|(u, v)| &(&u.square() + &v.square()) * &x == y) && m.member(&y.val_pan());
        r.record(ok, || format!("{m}: {x} times {q}"));
    }
    r
}

/// `M + M ⊆ M` and `a²M ⊆ M` on sampled members, in both characteristics,
/// plus soundness of sampled closure elements.
fn closure(seed: u64, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("closure", seed);
    for (k, m) in module_catalog().iter().enumerate() {
        let mut rng = Sampler::for_batch(seed, k as u64, 4);
        let pool: Vec<Series> = (0..POOL).filter_map(|_| rng.member(m, 2)).collect();
        let squares: Vec<(Series, Series)> = (0..POOL)
            .map(|_| {
                let a = rng.a_element(3);
                let a2 = a.square();
                (a, a2)
            })
            .collect();
        if pool.is_empty() {
            r.skipped += count;
            continue;
        }
        for _ in 0..count {
            let x = rng.pick(&pool).clone();
            let y = match rng.chance(0.2) {
                true => partner(&mut rng, &x, m).unwrap_or_else(|| x.clone()),
                false => rng.pick(&pool).clone(),
            };
            let (a, a2) = rng.pick(&squares);
            let s = &x + &y;
            let ok = if s.is_zero_known() { Some(true) } else { m.member(&s).ok() };
            r.record_opt(ok, || format!("{m}: {x} + {y}"));
            let ax = a2 * &x;
            let ok = if ax.is_zero_known() { Some(true) } else { m.member(&ax).ok() };
            r.record_opt(ok, || format!("{m}: ({a})^2 * {x}"));
        }
    }
    for (k, m) in char2_catalog().iter().enumerate() {
        let mut rng = Sampler::for_batch(seed, 1 << 32 | k as u64, 4);
        for _ in 0..count {
            let (x, y, a) = (rng.char2_member(m), rng.char2_member(m), rng.dyadic_a_element());
            r.record(m.member(&(&x + &y).val_pan()), || format!("{m}: {x} + {y}"));
            r.record(m.member(&(&a.square() * &x).val_pan()), || format!("{m}: ({a})^2 * {x}"));
        }
    }

    let cfg = SampleConfig { seed, count: 1, max_summands: 4, coeff_height: 4, precision: 5 };
    let mut rng = Sampler::new(seed, 4);
    for _ in 0..count.min(2000) {
        let gens: Vec<Series> = (0..1 + rng.below(3))
            .map(|_| {
                let v = rng.range_u32(0, 3);
                let p = if v == 0 { GaussRat::real(rng.nonzero_real()) } else { rng.probe_point() };
                rng.series_with(v, p, v + 4)
            })
            .collect();
        let Ok(m) = QQModule::from_generators(&gens) else {
            r.skipped += 1;
            continue;
        };
        let z = sample_closure_element(&gens, &cfg, &mut rng);
        let ok = if z.is_zero_known() { Some(true) } else { m.member(&z).ok() };
        r.record_opt(ok, || format!("cl({}) = {m} misses {z}", join(&gens)));
        if rng.chance(0.05) && !z.is_zero_known() {
            let found = bounded_realization_search(&z, &gens).found;
            if found {
                r.checked += 1;
            }
        }
    }
    r
}

fn join(gens: &[Series]) -> String {
    gens.iter().map(Series::to_string).collect::<Vec<_>>().join(", ")
}

#[allow(dead_code)]
fn descriptor_of(x: &DyadicSeries) -> Descriptor {
    x.val_pan()
}
