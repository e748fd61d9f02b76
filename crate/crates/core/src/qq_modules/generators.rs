//! Quasi-quadratic closures of finite sets and finite generation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::QQModule;
use crate::error::{Error, Result};
use crate::gauss_series::{sqrt_strict_unit, GaussRat, Series};
use crate::plane_cones::{Cone, Direction};

fn ray_of(x: &Series) -> Result<Cone> {
    Ok(Cone::ray(Direction::from_gauss(&x.pan()?)?))
}

impl QQModule {
    /// The closure `{Σ aᵢ² sᵢ : aᵢ ∈ A}` of a finite set, in normal form.
    pub fn from_generators(gens: &[Series]) -> Result<QQModule> {
        let mut vals = Vec::with_capacity(gens.len());
        for g in gens {
            g.require_in_a()?;
            vals.push(g.finite_val()?);
        }
        let Some(&m) = vals.iter().min() else {
            return Ok(QQModule::Zero);
        };
        let rays_at = |level: u32| -> Result<Vec<Cone>> {
            gens.iter().zip(&vals).filter(|(_, v)| **v == level).map(|(g, _)| ray_of(g)).collect()
        };
        let lead = Cone::sum_all(&rays_at(m)?);
        let next = if lead.is_symmetric() { Cone::Full } else { Cone::sum_all(&rays_at(m + 1)?) };
        QQModule::validate(m, lead, next)
    }

    /// Both defining level cones are finitely generated.
    pub fn is_fg(&self) -> bool {
        match self {
            QQModule::Zero => true,
            QQModule::Levels(l) => l.lead().is_fg() && l.next().is_fg(),
        }
    }

    /// A finite generating set: the cone generators placed at levels `m` and
    /// `m + 1`, plus `±X^k, ±iX^k` for `k = m + 2, m + 3`.
    pub fn fg_generators(&self) -> Result<Vec<Series>> {
        let QQModule::Levels(l) = self else {
            return Ok(vec![]);
        };
        if !self.is_fg() {
            return Err(Error::NotFinitelyGenerated);
        }
        let m = l.m();
        let p = m + 4;
        let mut out = Vec::new();
        for a in l.lead().generators()? {
            out.push(Series::monomial(a, m, p));
        }
        for b in l.next().generators()? {
            out.push(Series::monomial(b, m + 1, p));
        }
        for k in [m + 2, m + 3] {
            for c in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                out.push(Series::monomial(GaussRat::from_ints(c.0, c.1), k, p));
            }
        }
        Ok(out)
    }
}

/// `f = (α + iβ)·X^base·s²` with `s ∈ A` and `base ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareClassForm {
    #[serde(serialize_with = "rational_str")]
    pub alpha: BigRational,
    #[serde(serialize_with = "rational_str")]
    pub beta: BigRational,
    pub base: u32,
    pub s: Series,
}

fn rational_str<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// One term `a²·g` with `g` among `±1, ±i, ±X, ±iX`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub terms: Vec<(Series, Series)>,
}

impl Decomposition {
    pub fn expand(&self, precision: u32) -> Series {
        self.terms.iter().fold(Series::zero(precision), |acc, (a, g)| &acc + &(&a.square() * g))
    }
}

/// Writes `f` as a rational combination of `s²` and `i·s²`, possibly times `X`.
pub fn square_class_decompose(f: &Series) -> Result<SquareClassForm> {
    let v = f.finite_val()?;
    let c = f.pan()?;
    let unit = f.shift_down(v)?.scale(&c.inv()?);
    let s = sqrt_strict_unit(&unit)?.shift_up(v / 2);
    Ok(SquareClassForm { alpha: c.re().clone(), beta: c.im().clone(), base: v % 2, s })
}

impl SquareClassForm {
    /// `(α + iβ)·X^base·s²`.
    pub fn expand(&self) -> Series {
        let c = GaussRat::new(self.alpha.clone(), self.beta.clone());
        self.s.square().shift_up(self.base).scale(&c)
    }

    /// Re-expresses the record over the eight generators `±1, ±i, ±X, ±iX`
    /// with coefficients in `A`, splitting `|α|` and `|β|` into four rational squares.
    pub fn generator_terms(&self) -> Result<Decomposition> {
        let p = self.s.precision() + self.base;
        let mut terms = Vec::new();
        for (coef, unit) in [(&self.alpha, GaussRat::one()), (&self.beta, GaussRat::i())] {
            if coef.is_zero() {
                continue;
            }
            let g = if coef.is_negative() { -unit } else { unit };
            let gen = Series::monomial(g, self.base, p);
            for q in four_squares_rational(&coef.abs())? {
                if !q.is_zero() {
                    terms.push((self.s.scale(&GaussRat::real(q)), gen.clone()));
                }
            }
        }
        Ok(Decomposition { terms })
    }
}

fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

fn is_square(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

fn two_squares(n: u64) -> Option<(u64, u64)> {
    let mut a = isqrt(n);
    loop {
        if let Some(b) = is_square(n - a * a) {
            return Some((a, b));
        }
        if a == 0 || 2 * a * a < n {
            return None;
        }
        a -= 1;
    }
}

/// Not of the form `4^k(8j + 7)`.
fn three_square_representable(mut n: u64) -> bool {
    if n == 0 {
        return true;
    }
    while n % 4 == 0 {
        n /= 4;
    }
    n % 8 != 7
}

/// `n = a² + b² + c² + d²`, greedy in `a`.
pub(crate) fn four_squares(n: u64) -> [u64; 4] {
    let mut a = isqrt(n);
    loop {
        let r = n - a * a;
        if three_square_representable(r) {
            let mut b = isqrt(r);
            loop {
                if let Some((c, d)) = two_squares(r - b * b) {
                    return [a, b, c, d];
                }
                b -= 1;
            }
        }
        a -= 1;
    }
}

/// Four rationals whose squares sum to `q ≥ 0`.
pub fn four_squares_rational(q: &BigRational) -> Result<[BigRational; 4]> {
    if q.is_negative() {
        return Err(Error::InvalidDescriptor(format!("{q} is negative")));
    }
    let n: BigInt = q.numer() * q.denom();
    let n = n.to_u64().ok_or_else(|| Error::Overflow(format!("{q} too large for a four-square split")))?;
    let d = q.denom().clone();
    Ok(four_squares(n).map(|a| BigRational::new(BigInt::from(a), d.clone())))
}
