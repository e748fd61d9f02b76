//! Square roots of strict units and the constructive witnesses behind the
//! pseudo-angular component axioms.

use num_rational::BigRational;
use serde::Serialize;

use super::{GaussRat, Series, Valuation};
use crate::error::{Error, Result};

/// The square root `u` of a strict unit `s` (constant term 1) with `u(0) = 1`.
pub fn sqrt_strict_unit(s: &Series) -> Result<Series> {
    if !s.coeff(0).is_one() {
        return Err(Error::NotStrictUnit(s.coeff(0).to_string()));
    }
    let n = s.precision() as usize;
    let half = BigRational::new(1.into(), 2.into());
    let mut u: Vec<GaussRat> = Vec::with_capacity(n);
    u.push(GaussRat::one());
    for k in 1..n {
        let mut acc = s.coeff(k as u32);
        for j in 1..k {
            acc = &acc - &(&u[j] * &u[k - j]);
        }
        u.push(acc.scale(&half));
    }
    Ok(Series::from_terms(u.into_iter().enumerate().map(|(k, c)| (k as u32, c)), s.precision()))
}

/// `u ∈ A` with `y = u²·x` and `u²` a strict unit times a power of `X`.
///
/// Needs `val(x) ≤ val(y)` of the same parity and equal pseudo-angular components.
pub fn square_witness(x: &Series, y: &Series) -> Result<Series> {
    let vx = x.finite_val()?;
    let vy = y.finite_val()?;
    if vx % 2 != vy % 2 {
        return Err(Error::ParityMismatch(vx, vy));
    }
    if vy < vx {
        return Err(Error::ValuationOrder(format!("val(y) = {vy} < val(x) = {vx}")));
    }
    let (px, py) = (x.pan()?, y.pan()?);
    if px != py {
        return Err(Error::PanMismatch(px.to_string(), py.to_string()));
    }
    let d = vy - vx;
    let unit = y.checked_div(&x.shift_up(d))?;
    Ok(sqrt_strict_unit(&unit)?.shift_up(d / 2))
}

/// `u = k·X^g`, for which `val(u) = g` and `pan(a·u²) = pan(a)·k²`.
pub fn mixed_square_witness(a: &Series, g: u32, k: &GaussRat) -> Result<Series> {
    a.finite_val()?;
    if k.is_zero() {
        return Err(Error::ZeroScalar);
    }
    Ok(Series::monomial(k.clone(), g, a.precision() + g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub applicable: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        AxiomCheck { name, applicable: 0, passed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.applicable += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub samples: usize,
    /// Pairs with an undetermined valuation, which no check applies to.
    pub skipped: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(AxiomCheck::ok)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn same_up_to(a: &Series, b: &Series) -> bool {
    let p = a.precision().min(b.precision());
    a.truncate(p) == b.truncate(p)
}

/// Checks the pseudo-angular component axioms on sample pairs.
///
/// The check names are `unit_pan`, `unit_scaling`, `realize`, `sum_dominant`,
/// `sum_equal`, `cancellation`, `square_class` and `square_factor`. The
/// existential ones are discharged by building the witness and verifying it.
pub fn pan_axiom_report(samples: &[(Series, Series)]) -> AxiomReport {
    let mut unit_pan = AxiomCheck::new("unit_pan");
    let mut unit_scaling = AxiomCheck::new("unit_scaling");
    let mut realize = AxiomCheck::new("realize");
    let mut sum_dominant = AxiomCheck::new("sum_dominant");
    let mut sum_equal = AxiomCheck::new("sum_equal");
    let mut cancellation = AxiomCheck::new("cancellation");
    let mut square_class = AxiomCheck::new("square_class");
    let mut square_factor = AxiomCheck::new("square_factor");
    let mut skipped = 0;

    for (a, b) in samples {
        let (Some(va), Some(vb)) = (a.val().finite(), b.val().finite()) else {
            skipped += 1;
            continue;
        };
        let (pa, pb) = (a.pan().expect("finite"), b.pan().expect("finite"));

        for s in [a, b] {
            if s.val() == Valuation::Finite(0) {
                unit_pan.record(s.pan().ok() == Some(s.coeff(0)), || format!("u = {s}"));
            }
        }

        // A unit built from `a`: `a` itself, or `1 + a` when `a` is in the maximal ideal.
        let u = if va == 0 { a.clone() } else { &Series::one(a.precision()) + a };
        let ub = &u * b;
        unit_scaling.record(ub.pan().ok() == Some(&u.coeff(0) * &pb), || format!("u = {u}, x = {b}"));

        let w = Series::monomial(pb.clone(), va, va + 1);
        realize.record(w.val() == Valuation::Finite(va) && w.pan().ok() == Some(pb.clone()), || {
            format!("g = {va}, c = {pb}")
        });

        let sum = a + b;
        if va != vb {
            let (lo, plo, vlo) = if va < vb { (a, &pa, va) } else { (b, &pb, vb) };
            sum_dominant.record(sum.val() == Valuation::Finite(vlo) && sum.pan().ok().as_ref() == Some(plo), || {
                format!("x1 = {lo}, x2 = {}", if va < vb { b } else { a })
            });
        } else if !(&pa + &pb).is_zero() {
            sum_equal.record(sum.val() == Valuation::Finite(va) && sum.pan().ok() == Some(&pa + &pb), || {
                format!("x1 = {a}, x2 = {b}")
            });
        } else {
            cancellation.record(sum.val().lower_bound() > va, || format!("x = {a}, y = {b}"));
        }

        square_class.record(check_square_class(a, b), || format!("x = {a}, y = {b}"));

        let lhs = (a * &b.square()).pan().ok();
        let direct = lhs == Some(&pa * &pb.square());
        let lemma = mixed_square_witness(a, vb, &pb).is_ok_and(|u| {
            u.val() == Valuation::Finite(vb) && (a * &u.square()).pan().ok() == Some(&pa * &pb.square())
        });
        square_factor.record(direct && lemma, || format!("a = {a}, u = {b}"));
    }

    AxiomReport {
        samples: samples.len(),
        skipped,
        checks: vec![
            unit_pan,
            unit_scaling,
            realize,
            sum_dominant,
            sum_equal,
            cancellation,
            square_class,
            square_factor,
        ],
    }
}

/// Moves the pair into the shape `square_witness` accepts (same parity,
/// same pan, lower valuation first) and verifies the witness it returns.
fn check_square_class(a: &Series, b: &Series) -> bool {
    let (x, mut y) =
        if a.val().lower_bound() <= b.val().lower_bound() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    let (vx, vy) = (x.val().lower_bound(), y.val().lower_bound());
    if vx % 2 != vy % 2 {
        y = y.shift_up(1);
    }
    let (px, py) = match (x.pan(), y.pan()) {
        (Ok(px), Ok(py)) => (px, py),
        _ => return false,
    };
    y = y.scale(&(&px / &py));
    match square_witness(&x, &y) {
        Ok(u) => u.in_a() && same_up_to(&(&u.square() * &x), &y),
        Err(_) => false,
    }
}
