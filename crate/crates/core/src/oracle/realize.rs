//! Constructive searches: explicit representations `Σ aᵢ²·sᵢ` of a target,
//! and explicit splittings of members of a sum of modules.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::sample::cone_points;
use crate::gauss_series::{sqrt_strict_unit, GaussRat, Series};
use crate::plane_cones::Cone;
use crate::qq_modules::{four_squares_rational, QQModule};

/// One summand `a²·gens[generator]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationTerm {
    pub coefficient: Series,
    pub generator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub found: bool,
    /// Number of leading coefficients checked against the target.
    pub precision: u32,
    pub terms: Vec<RealizationTerm>,
}

impl Realization {
    /// `Σ aᵢ²·gens[i]`, or `None` if nothing was found.
    pub fn expand(&self, gens: &[Series], precision: u32) -> Option<Series> {
        self.found.then(|| {
            self.terms
                .iter()
                .fold(Series::zero(precision), |acc, t| &acc + &(&t.coefficient.square() * &gens[t.generator]))
        })
    }
}

const MAX_DEPTH: u32 = 4;

fn term(coefficient: Series, generator: usize) -> RealizationTerm {
    RealizationTerm { coefficient, generator }
}

fn cross(a: &GaussRat, b: &GaussRat) -> BigRational {
    a.re() * b.im() - a.im() * b.re()
}

/// `z = ((z+1)/2)² + (i(z-1)/2)²`.
fn two_gauss_squares(z: &GaussRat) -> [GaussRat; 2] {
    let half = GaussRat::real(BigRational::new(1.into(), 2.into()));
    let a = &(z + &GaussRat::one()) * &half;
    let b = &(&(z - &GaussRat::one()) * &half) * &GaussRat::i();
    [a, b]
}

/// Nonnegative `λ` with `p = Σ λⱼ·qⱼ` over at most two of the `qs`.
fn nonneg_combination(p: &GaussRat, qs: &[GaussRat]) -> Option<Vec<(usize, BigRational)>> {
    for (j, q) in qs.iter().enumerate() {
        if cross(q, p).is_zero() {
            let lam = if q.re().is_zero() { p.im() / q.im() } else { p.re() / q.re() };
            if lam.is_positive() {
                return Some(vec![(j, lam)]);
            }
        }
    }
    for (j, q1) in qs.iter().enumerate() {
        for (l, q2) in qs.iter().enumerate().skip(j + 1) {
            let det = cross(q1, q2);
            if det.is_zero() {
                continue;
            }
            let l1 = cross(p, q2) / &det;
            let l2 = cross(q1, p) / &det;
            if l1.is_positive() && l2.is_positive() {
                return Some(vec![(j, l1), (l, l2)]);
            }
        }
    }
    None
}

fn realize(t: &Series, gens: &[Series], vals: &[Option<u32>], depth: u32) -> Option<Vec<RealizationTerm>> {
    if t.is_zero_known() {
        return Some(vec![]);
    }
    if depth == 0 {
        return None;
    }
    let v = t.val().finite()?;
    let p = t.pan().ok()?;

    // A generator strictly below with the same parity: write t/s as X^{2k}·c·e²
    // and split c as a sum of two squares.
    for (i, s) in gens.iter().enumerate() {
        let Some(w) = vals[i] else { continue };
        if w >= v || (v - w) % 2 != 0 {
            continue;
        }
        let k = (v - w) / 2;
        let c = &p / &s.pan().ok()?;
        let r = t.checked_div(s).ok()?.shift_down(2 * k).ok()?;
        let e = sqrt_strict_unit(&r.scale(&c.inv().ok()?)).ok()?;
        let mut out = vec![];
        for a in two_gauss_squares(&c) {
            if !a.is_zero() {
                out.push(term(e.scale(&a).shift_up(k), i));
            }
        }
        return Some(out);
    }

    // Generators at the same level: a positive rational combination of their
    // pseudo-angular components, each weight a sum of four rational squares.
    let same: Vec<usize> = (0..gens.len()).filter(|&i| vals[i] == Some(v)).collect();
    let qs: Vec<GaussRat> = same.iter().filter_map(|&i| gens[i].pan().ok()).collect();
    // One parallel generator: t = λ·e²·s exactly.
    for (j, q) in qs.iter().enumerate() {
        let Some(combo) = nonneg_combination(&p, std::slice::from_ref(q)) else { continue };
        let (_, lam) = &combo[0];
        let i = same[j];
        let Some(e) =
            t.checked_div(&gens[i]).ok().and_then(|y| sqrt_strict_unit(&y.scale(&GaussRat::real(lam.recip()))).ok())
        else {
            continue;
        };
        let mut out = vec![];
        for r in four_squares_rational(lam).ok()? {
            if !r.is_zero() {
                out.push(term(e.scale(&GaussRat::real(r)), i));
            }
        }
        return Some(out);
    }
    if let Some(combo) = nonneg_combination(&p, &qs) {
        let mut out = vec![];
        let mut rest = t.clone();
        for (j, lam) in combo {
            let i = same[j];
            rest = &rest - &gens[i].scale(&GaussRat::real(lam.clone()));
            for r in four_squares_rational(&lam).ok()? {
                if !r.is_zero() {
                    out.push(term(Series::constant(GaussRat::real(r), t.precision()), i));
                }
            }
        }
        if let Some(more) = realize(&rest, gens, vals, depth - 1) {
            out.extend(more);
            return Some(out);
        }
    }

    // A pair ±u below t: t = ((y+1)/2)²·u + ((y-1)/2)²·(-u) with y = t/u.
    for (i, s) in gens.iter().enumerate() {
        let Some(w) = vals[i] else { continue };
        if w + 2 < v {
            // u = X²·s and -u = (iX)²·s.
            let u = s.shift_up(2);
            let (a1, a2) = halves(t, &u)?;
            return Some(vec![term(a1.shift_up(1), i), term(a2.shift_up(1).scale(&GaussRat::i()), i)]);
        }
    }
    for (i, s) in gens.iter().enumerate() {
        let Some(w) = vals[i] else { continue };
        if w >= v {
            continue;
        }
        let Some(neg) = realize(&-s, gens, vals, depth - 1) else { continue };
        let (a1, a2) = halves(t, s)?;
        let mut out = vec![term(a1, i)];
        out.extend(neg.into_iter().map(|tm| term(&a2 * &tm.coefficient, tm.generator)));
        return Some(out);
    }
    None
}

/// `((y+1)/2, (y-1)/2)` for `y = t/u`.
fn halves(t: &Series, u: &Series) -> Option<(Series, Series)> {
    let y = t.checked_div(u).ok()?;
    let half = GaussRat::real(BigRational::new(1.into(), 2.into()));
    let one = Series::one(y.precision());
    Some(((&y + &one).scale(&half), (&y - &one).scale(&half)))
}

/// Looks for `a₁, …, aₙ ∈ A` with `target = Σ aᵢ²·sᵢ` by explicit constructions.
///
/// The answer is verified exactly: `found` means the expansion agrees with the
/// target through `precision`, the precision both are known to, and that this
/// covers the target's leading term. Not finding one is evidence only.
pub fn bounded_realization_search(target: &Series, gens: &[Series]) -> Realization {
    let none = Realization { found: false, precision: 0, terms: vec![] };
    if !target.in_a() || gens.iter().any(|g| !g.in_a()) {
        return none;
    }
    let Some(v) = target.val().finite() else {
        return none;
    };
    let vals: Vec<Option<u32>> = gens.iter().map(|g| g.val().finite()).collect();
    let Some(terms) = realize(target, gens, &vals, MAX_DEPTH) else {
        return none;
    };
    let mut r = Realization { found: true, precision: 0, terms };
    let Some(s) = r.expand(gens, target.precision()) else {
        return none;
    };
    let p = s.precision().min(target.precision());
    if p > v && r.terms.iter().all(|t| t.coefficient.in_a()) && s.truncate(p) == target.truncate(p) {
        r.precision = p;
        r
    } else {
        none
    }
}

/// How a member of `M₁ + M₂` was split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    InFirst,
    InSecond,
    /// The component is a sum of components of the two level cones.
    ConeSplit,
    /// Cancellation `u·X^h - u·X^h` at a lower level `h` with `u ∈ M₁,h ∩ -M₂,h`.
    Cancellation(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumSplit {
    pub x: Series,
    pub y: Series,
    pub rule: SplitRule,
}

/// Positive `μ` with `p - μ·e ∈ c`, testing the critical values and the
/// midpoints between them.
fn peel(p: &GaussRat, e: &GaussRat, c: &Cone) -> Option<BigRational> {
    let mut crit: Vec<BigRational> = c
        .critical_dirs()
        .into_iter()
        .map(|d| d.to_gauss())
        .filter_map(|b| {
            let den = cross(&b, e);
            (!den.is_zero()).then(|| cross(&b, p) / den)
        })
        .filter(|m| m.is_positive())
        .collect();
    crit.sort();
    crit.dedup();
    let mut cands = crit.clone();
    let two = BigRational::from_integer(2.into());
    for w in crit.windows(2) {
        cands.push((&w[0] + &w[1]) / &two);
    }
    match (crit.first(), crit.last()) {
        (Some(a), Some(b)) => {
            cands.push(a / &two);
            cands.push(b + BigRational::one());
        }
        _ => cands.push(BigRational::one()),
    }
    cands.into_iter().find(|m| {
        let q = p - &e.scale(m);
        !q.is_zero() && c.contains(&q)
    })
}

fn split_components(p: &GaussRat, l1: &Cone, l2: &Cone) -> Option<(GaussRat, GaussRat)> {
    for e in cone_points(l2) {
        if let Some(mu) = peel(p, &e, l1) {
            let y = e.scale(&mu);
            return Some((p - &y, y));
        }
    }
    for d in cone_points(l1) {
        if let Some(lam) = peel(p, &d, l2) {
            let x = d.scale(&lam);
            let y = p - &x;
            return Some((x, y));
        }
    }
    None
}

/// Membership where a known zero belongs to every module.
fn holds(m: &QQModule, x: &Series) -> Option<bool> {
    if x.is_zero_known() {
        Some(true)
    } else {
        m.member(x).ok()
    }
}

/// Writes `z ∈ M₁ + M₂` as `x + y` with `x ∈ M₁`, `y ∈ M₂`, and verifies it.
pub fn split_sum_member(z: &Series, m1: &QQModule, m2: &QQModule) -> Option<SumSplit> {
    let n = z.precision();
    let zero = Series::zero(n);
    let check = |x: Series, y: Series, rule| -> Option<SumSplit> {
        let ok = holds(m1, &x)? && holds(m2, &y)? && (&x + &y).truncate(n) == *z;
        ok.then_some(SumSplit { x, y, rule })
    };
    if m1.member(z).ok()? {
        return check(z.clone(), zero, SplitRule::InFirst);
    }
    if m2.member(z).ok()? {
        return check(zero, z.clone(), SplitRule::InSecond);
    }
    let g = z.val().finite()?;
    let p = z.pan().ok()?;
    if let Some((p1, _)) = split_components(&p, &m1.level(g), &m2.level(g)) {
        let x = z.scale(&(&p1 / &p));
        let y = z - &x;
        if let Some(s) = check(x, y, SplitRule::ConeSplit) {
            return Some(s);
        }
    }
    for h in 0..g {
        let both = m1.level(h).intersect(&m2.level(h).negate());
        if let Some(u) = cone_points(&both).into_iter().next() {
            let w = Series::monomial(u, h, n);
            if let Some(s) = check(z + &w, -&w, SplitRule::Cancellation(h)) {
                return Some(s);
            }
        }
    }
    None
}
