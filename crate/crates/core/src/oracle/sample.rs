//! Seeded random elements: rationals, series in `A`, points of cones and
//! members of modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::char2_hahn::{Descriptor, Dyadic, DyadicSeries, F4};
use crate::char2_modules::Char2Module;
use crate::error::{Error, Result};
use crate::gauss_series::{GaussRat, Series};
use crate::plane_cones::{Cone, Direction};
use crate::qq_modules::QQModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub max_summands: usize,
    pub coeff_height: i64,
    pub precision: u32,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 0, count: 100, max_summands: 4, coeff_height: 5, precision: 6 }
    }
}

impl SampleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 || self.max_summands == 0 || self.coeff_height < 1 || self.precision == 0 {
            return Err(Error::Limit("count, max_summands, coeff_height and precision must all be positive".into()));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer; batch `k` of a run seeded with `s` uses `splitmix64(s ^ splitmix64(k))`.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn batch_seed(seed: u64, batch: u64) -> u64 {
    splitmix64(seed ^ splitmix64(batch))
}

pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    pub fn new(seed: u64, height: i64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), height: height.max(1) }
    }

    pub fn for_batch(seed: u64, batch: u64, height: i64) -> Sampler {
        Sampler::new(batch_seed(seed, batch), height)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn range_u32(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.random_range(lo..=hi)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.below(xs.len())]
    }

    pub fn rational(&mut self) -> BigRational {
        let h = self.height;
        let n = self.rng.random_range(-h..=h);
        let d = self.rng.random_range(1..=h);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn positive_rational(&mut self) -> BigRational {
        let h = self.height;
        let n = self.rng.random_range(1..=h);
        let d = self.rng.random_range(1..=h);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_real(&mut self) -> BigRational {
        let q = self.positive_rational();
        if self.chance(0.5) {
            -q
        } else {
            q
        }
    }

    pub fn gauss(&mut self) -> GaussRat {
        GaussRat::new(self.rational(), self.rational())
    }

    pub fn nonzero_gauss(&mut self) -> GaussRat {
        loop {
            let z = self.gauss();
            if !z.is_zero() {
                return z;
            }
        }
    }

    /// A nonzero value biased towards the axes and diagonals, where cone
    /// boundaries sit.
    pub fn probe_point(&mut self) -> GaussRat {
        const DIRS: [(i64, i64); 12] =
            [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (-1, -1), (1, -1), (2, 1), (1, 2), (-2, 1), (1, -2)];
        if self.chance(0.5) {
            let (x, y) = *self.pick(&DIRS);
            GaussRat::from_ints(x, y).scale(&self.positive_rational())
        } else {
            self.nonzero_gauss()
        }
    }

    /// Random coefficients strictly above `v`, up to the precision.
    fn tail(&mut self, v: u32, precision: u32) -> Vec<(u32, GaussRat)> {
        let mut out = vec![];
        for k in v + 1..precision {
            if self.chance(0.6) {
                out.push((k, self.gauss()));
            }
        }
        out
    }

    /// A series with the given leading term and a random tail.
    pub fn series_with(&mut self, v: u32, pan: GaussRat, precision: u32) -> Series {
        let precision = precision.max(v + 1);
        let mut terms = self.tail(v, precision);
        terms.push((v, pan));
        Series::from_terms(terms, precision)
    }

    /// A series with valuation `v`, any nonzero leading coefficient and up to
    /// `extra` further known coefficients.
    pub fn random_series(&mut self, v: u32, extra: u32) -> Series {
        let pan = self.nonzero_gauss();
        let precision = v + 1 + self.range_u32(0, extra);
        self.series_with(v, pan, precision)
    }

    /// A random element of `A`, possibly zero.
    pub fn a_element(&mut self, precision: u32) -> Series {
        let mut terms = self.tail(0, precision);
        if self.chance(0.7) {
            terms.push((0, GaussRat::real(self.rational())));
        }
        Series::from_terms(terms, precision)
    }

    /// A nonzero element of `A` with valuation at most `max_val` and its
    /// leading term drawn by [`Sampler::probe_point`].
    pub fn probe_series(&mut self, max_val: u32, extra: u32) -> Series {
        let v = self.range_u32(0, max_val);
        let pan = if v == 0 { GaussRat::real(self.nonzero_real()) } else { self.probe_point() };
        let p = v + 1 + self.range_u32(0, extra);
        self.series_with(v, pan, p)
    }

    pub fn point_in_cone(&mut self, c: &Cone) -> Option<GaussRat> {
        let k = self.positive_rational();
        let g = |d: Direction| d.to_gauss();
        Some(match c {
            Cone::Zero => return None,
            Cone::Full => self.nonzero_gauss(),
            Cone::Line(a) => {
                let s = if self.chance(0.5) { k } else { -k };
                g(a.dir()).scale(&s)
            }
            Cone::Ray(d) => g(*d).scale(&k),
            Cone::Fan(f) => {
                let roll = self.below(4);
                if roll == 0 && f.lo_closed() {
                    g(f.lo()).scale(&k)
                } else if roll == 1 && f.hi_closed() {
                    g(f.hi()).scale(&k)
                } else {
                    let mid = if f.is_half_plane() {
                        f.lo().rot90()
                    } else {
                        Direction::bisector(f.lo(), f.hi()).expect("a sector narrower than a half-plane")
                    };
                    let (a, c2) = (self.rational().abs(), self.rational().abs());
                    &(&g(f.lo()).scale(&a) + &g(mid).scale(&k)) + &g(f.hi()).scale(&c2)
                }
            }
        })
    }

    /// A nonzero member of the module, at one of its first four levels.
    pub fn member(&mut self, m: &QQModule, extra: u32) -> Option<Series> {
        let lo = m.min_level()?;
        loop {
            let g = lo + self.range_u32(0, 3);
            if let Some(p) = self.point_in_cone(&m.level(g)) {
                let prec = g + 1 + self.range_u32(0, extra);
                return Some(self.series_with(g, p, prec));
            }
        }
    }

    pub fn f4(&mut self) -> F4 {
        F4::ALL[self.below(4)]
    }

    pub fn nonzero_f4(&mut self) -> F4 {
        F4::ALL[1 + self.below(3)]
    }

    /// `n / 2^k` with `n < 2^k · max` and `k ≤ 3`.
    pub fn dyadic(&mut self, max: u64) -> Dyadic {
        let k = self.range_u32(0, 3);
        Dyadic::new(self.rng.random_range(0..(max << k).max(1)), k)
    }

    /// Up to `terms` random terms with exponents strictly above `above`.
    pub fn dyadic_tail(&mut self, above: &Dyadic, terms: usize) -> DyadicSeries {
        let n = self.below(terms + 1);
        let step = Dyadic::new(1, 3);
        DyadicSeries::from_terms((0..n).map(|_| {
            let e = &(above + &step) + &self.dyadic(2);
            (e, self.f4())
        }))
    }

    /// A random element of `A` in the characteristic-two model.
    pub fn dyadic_a_element(&mut self) -> DyadicSeries {
        let c = if self.chance(0.5) { F4::ONE } else { F4::ZERO };
        &DyadicSeries::monomial(c, Dyadic::zero()) + &self.dyadic_tail(&Dyadic::zero(), 3)
    }

    /// A random element of the maximal ideal.
    pub fn dyadic_maximal(&mut self) -> DyadicSeries {
        let v = &Dyadic::new(1, 3) + &self.dyadic(2);
        &DyadicSeries::monomial(self.f4(), v.clone()) + &self.dyadic_tail(&v, 4)
    }

    /// A series realizing a random member of `m`, possibly zero.
    pub fn char2_member(&mut self, m: &Char2Module) -> DyadicSeries {
        for _ in 0..64 {
            let v = self.dyadic(3);
            let p = if v.is_zero() { F4::ONE } else { self.nonzero_f4() };
            let d = Descriptor::finite(v.clone(), p).expect("nonzero component");
            if m.member(&d) {
                return &DyadicSeries::monomial(p, v.clone()) + &self.dyadic_tail(&v, 3);
            }
        }
        DyadicSeries::zero()
    }
}

/// Deterministic points of a cone: boundary rays when closed plus interior directions.
pub fn cone_points(c: &Cone) -> Vec<GaussRat> {
    let g = |d: Direction| d.to_gauss();
    match c {
        Cone::Zero => vec![],
        Cone::Full => [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (-1, -1), (1, -1)]
            .iter()
            .map(|&(x, y)| GaussRat::from_ints(x, y))
            .collect(),
        Cone::Line(a) => vec![g(a.dir()), g(a.dir().neg())],
        Cone::Ray(d) => vec![g(*d)],
        Cone::Fan(f) => {
            let mid = if f.is_half_plane() {
                f.lo().rot90()
            } else {
                Direction::bisector(f.lo(), f.hi()).expect("a sector narrower than a half-plane")
            };
            let mut out = vec![g(mid)];
            for e in [f.lo(), f.hi()] {
                if let Ok(b) = Direction::bisector(e, mid) {
                    out.push(g(b));
                }
            }
            if f.lo_closed() {
                out.push(g(f.lo()));
            }
            if f.hi_closed() {
                out.push(g(f.hi()));
            }
            out
        }
    }
}
