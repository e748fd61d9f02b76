//! Convex cones in the plane `C = R²`, i.e. the quasi-quadratic `R`-modules in `C`.
//!
//! Every geometric question is answered with integer cross and dot product
//! signs; no angle is ever computed. [`Cone::fan`] is the single normalizer, so
//! two cones are equal as sets exactly when they are equal as values.

mod ops;
mod text;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gauss_series::GaussRat;

/// Largest absolute value allowed for a direction component. Keeps every
/// cross product, and the sum of two directions, far from overflow.
pub const MAX_COMPONENT: i64 = 1 << 40;

/// A nonzero primitive integer vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    x: i64,
    y: i64,
}

impl Direction {
    pub const E1: Direction = Direction { x: 1, y: 0 };
    pub const E2: Direction = Direction { x: 0, y: 1 };

    /// Reduces `(x, y)` by the gcd of its components.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        Direction::from_i128(x as i128, y as i128)
    }

    fn from_i128(x: i128, y: i128) -> Result<Self> {
        if x == 0 && y == 0 {
            return Err(Error::InvalidDirection("(0, 0) is not a direction".into()));
        }
        let g = x.gcd(&y);
        let (x, y) = (x / g, y / g);
        let lim = MAX_COMPONENT as i128;
        if x.abs() > lim || y.abs() > lim {
            return Err(Error::Overflow(format!("direction ({x}, {y}) exceeds 2^40")));
        }
        Ok(Direction { x: x as i64, y: y as i64 })
    }

    pub fn x(self) -> i64 {
        self.x
    }

    pub fn y(self) -> i64 {
        self.y
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Direction { x: -self.x, y: -self.y }
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(self) -> Self {
        Direction { x: -self.y, y: self.x }
    }

    pub fn cross(self, o: Direction) -> i128 {
        self.x as i128 * o.y as i128 - self.y as i128 * o.x as i128
    }

    pub fn dot(self, o: Direction) -> i128 {
        self.x as i128 * o.x as i128 + self.y as i128 * o.y as i128
    }

    /// Representative of `±self` whose first nonzero coordinate is positive.
    pub fn axis(self) -> Self {
        if self.x < 0 || (self.x == 0 && self.y < 0) {
            self.neg()
        } else {
            self
        }
    }

    /// Reduced direction of `a + b`; `a` and `b` must not be antipodal.
    pub fn bisector(a: Direction, b: Direction) -> Result<Self> {
        Direction::from_i128(a.x as i128 + b.x as i128, a.y as i128 + b.y as i128)
    }

    /// The direction of a nonzero Gaussian rational.
    pub fn from_gauss(z: &GaussRat) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::InvalidDirection("0 has no direction".into()));
        }
        let l = z.re().denom().lcm(z.im().denom());
        let scale = BigRational::from_integer(l);
        let to_int = |r: &BigRational| -> BigInt { (r * &scale).to_integer() };
        let (mut x, mut y) = (to_int(z.re()), to_int(z.im()));
        let g = x.gcd(&y);
        x /= &g;
        y /= &g;
        match (x.to_i64(), y.to_i64()) {
            (Some(x), Some(y)) => Direction::new(x, y),
            _ => Err(Error::Overflow(format!("direction of {z} exceeds 2^40"))),
        }
    }

    pub fn to_gauss(self) -> GaussRat {
        GaussRat::from_ints(self.x, self.y)
    }

    /// Upper half (angle in `[0, π)`) sorts first.
    fn half(self) -> u8 {
        if self.y > 0 || (self.y == 0 && self.x > 0) {
            0
        } else {
            1
        }
    }

    /// Counterclockwise angular order starting at the positive real axis.
    pub fn angle_cmp(self, o: Direction) -> Ordering {
        self.half().cmp(&o.half()).then_with(|| 0.cmp(&self.cross(o)))
    }
}

/// Anything that can be located relative to a direction.
pub trait PlanePoint {
    fn is_origin(&self) -> bool;
    /// Sign of `cross(d, self)`: positive when `self` is counterclockwise of `d`.
    fn side_of(&self, d: Direction) -> Ordering;
    /// Sign of `dot(d, self)`.
    fn along(&self, d: Direction) -> Ordering;
}

impl PlanePoint for Direction {
    fn is_origin(&self) -> bool {
        false
    }
    fn side_of(&self, d: Direction) -> Ordering {
        d.cross(*self).cmp(&0)
    }
    fn along(&self, d: Direction) -> Ordering {
        d.dot(*self).cmp(&0)
    }
}

fn rat_sign(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl PlanePoint for GaussRat {
    fn is_origin(&self) -> bool {
        self.is_zero()
    }
    fn side_of(&self, d: Direction) -> Ordering {
        let v = self.im() * BigInt::from(d.x) - self.re() * BigInt::from(d.y);
        rat_sign(&v)
    }
    fn along(&self, d: Direction) -> Ordering {
        let v = self.re() * BigInt::from(d.x) + self.im() * BigInt::from(d.y);
        rat_sign(&v)
    }
}

/// A line through the origin, stored by its canonical axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Axis(Direction);

impl Axis {
    pub fn new(d: Direction) -> Self {
        Axis(d.axis())
    }
    pub fn dir(self) -> Direction {
        self.0
    }
}

/// A sector of positive angle at most `π`, with independent boundary flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    lo: Direction,
    lo_closed: bool,
    hi: Direction,
    hi_closed: bool,
}

impl Fan {
    pub fn lo(&self) -> Direction {
        self.lo
    }
    pub fn hi(&self) -> Direction {
        self.hi
    }
    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }
    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }
    pub fn is_half_plane(&self) -> bool {
        self.hi == self.lo.neg()
    }
    pub fn is_closed(&self) -> bool {
        self.lo_closed && self.hi_closed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cone {
    Zero,
    Full,
    Line(Axis),
    Ray(Direction),
    Fan(Fan),
}

impl Cone {
    pub fn line(d: Direction) -> Self {
        Cone::Line(Axis::new(d))
    }

    pub fn ray(d: Direction) -> Self {
        Cone::Ray(d)
    }

    /// The sector swept counterclockwise from `lo` to `hi`.
    ///
    /// A zero-width sector becomes a ray when both flags are closed and the
    /// zero cone otherwise. Sectors wider than `π` are rejected.
    pub fn fan(lo: Direction, lo_closed: bool, hi: Direction, hi_closed: bool) -> Result<Self> {
        if lo == hi {
            return Ok(if lo_closed && hi_closed { Cone::Ray(lo) } else { Cone::Zero });
        }
        let c = lo.cross(hi);
        if c < 0 || (c == 0 && hi != lo.neg()) {
            return Err(Error::InvalidCone(format!(
                "sector from ({}, {}) to ({}, {}) is wider than a half-plane",
                lo.x, lo.y, hi.x, hi.y
            )));
        }
        Ok(Cone::Fan(Fan { lo, lo_closed, hi, hi_closed }))
    }

    /// Closed sector from integer vectors, for literals.
    pub fn fan_cc(lo: (i64, i64), hi: (i64, i64)) -> Result<Self> {
        Cone::fan(Direction::new(lo.0, lo.1)?, true, Direction::new(hi.0, hi.1)?, true)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cone::Zero)
    }

    pub fn contains<P: PlanePoint>(&self, z: &P) -> bool {
        if z.is_origin() {
            return true;
        }
        match self {
            Cone::Zero => false,
            Cone::Full => true,
            Cone::Line(a) => z.side_of(a.0) == Ordering::Equal,
            Cone::Ray(d) => z.side_of(*d) == Ordering::Equal && z.along(*d) == Ordering::Greater,
            Cone::Fan(f) => {
                let s_lo = z.side_of(f.lo);
                if f.is_half_plane() {
                    return match s_lo {
                        Ordering::Greater => true,
                        Ordering::Less => false,
                        Ordering::Equal if z.along(f.lo) == Ordering::Greater => f.lo_closed,
                        Ordering::Equal => f.hi_closed,
                    };
                }
                let s_hi = z.side_of(f.hi);
                if s_lo == Ordering::Greater && s_hi == Ordering::Less {
                    true
                } else if s_lo == Ordering::Equal && z.along(f.lo) == Ordering::Greater {
                    f.lo_closed
                } else if s_hi == Ordering::Equal && z.along(f.hi) == Ordering::Greater {
                    f.hi_closed
                } else {
                    false
                }
            }
        }
    }

    pub fn negate(&self) -> Self {
        match *self {
            Cone::Ray(d) => Cone::Ray(d.neg()),
            Cone::Fan(f) => Cone::Fan(Fan { lo: f.lo.neg(), hi: f.hi.neg(), ..f }),
            other => other,
        }
    }

    /// `cl_C`: the closure over the field `C`, which is everything once nonzero.
    pub fn cl_full(&self) -> Self {
        if self.is_zero() {
            Cone::Zero
        } else {
            Cone::Full
        }
    }

    /// Whether some nonzero `u` has both `u` and `-u` in the cone.
    pub fn is_symmetric(&self) -> bool {
        match self {
            Cone::Full | Cone::Line(_) => true,
            Cone::Fan(f) => f.is_half_plane() && f.is_closed(),
            Cone::Zero | Cone::Ray(_) => false,
        }
    }

    /// Finitely generated as a quasi-quadratic `R`-module: no open boundary.
    pub fn is_fg(&self) -> bool {
        match self {
            Cone::Fan(f) => f.is_closed(),
            _ => true,
        }
    }

    /// Finite generators whose closure under sums and rational squares is the cone.
    pub fn generators(&self) -> Result<Vec<GaussRat>> {
        Ok(self.generator_dirs()?.into_iter().map(Direction::to_gauss).collect())
    }

    pub fn generator_dirs(&self) -> Result<Vec<Direction>> {
        Ok(match *self {
            Cone::Zero => vec![],
            Cone::Full => vec![Direction::E1, Direction::E1.neg(), Direction::E2, Direction::E2.neg()],
            Cone::Line(a) => vec![a.0, a.0.neg()],
            Cone::Ray(d) => vec![d],
            Cone::Fan(f) if !f.is_closed() => return Err(Error::NotFinitelyGenerated),
            Cone::Fan(f) if f.is_half_plane() => vec![f.lo, f.lo.rot90(), f.hi],
            Cone::Fan(f) => vec![f.lo, Direction::bisector(f.lo, f.hi)?, f.hi],
        })
    }

    /// Intersection with the real axis.
    pub fn restrict_real(&self) -> Self {
        self.intersect(&Cone::line(Direction::E1))
    }

    pub fn is_subset_of(&self, other: &Cone) -> bool {
        self.intersect(other) == *self
    }

    /// Directions at which membership can change.
    pub(crate) fn critical_dirs(&self) -> Vec<Direction> {
        match *self {
            Cone::Zero | Cone::Full => vec![],
            Cone::Line(a) => vec![a.0, a.0.neg()],
            Cone::Ray(d) => vec![d],
            Cone::Fan(f) => vec![f.lo, f.hi],
        }
    }
}

#[cfg(test)]
mod tests;
