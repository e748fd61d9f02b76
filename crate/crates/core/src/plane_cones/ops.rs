//! Intersection and Minkowski sum of cones.

use super::{Cone, Direction};

fn sort_dirs(mut dirs: Vec<Direction>) -> Vec<Direction> {
    dirs.sort_by(|a, b| a.angle_cmp(*b));
    dirs.dedup();
    dirs
}

/// Rebuilds a cone from its membership pattern around the circle.
///
/// `dirs` is sorted by angle with consecutive gaps below `π`; `points[j]`
/// tells whether `dirs[j]` is in the cone and `arcs[j]` whether the open arc
/// from `dirs[j]` to `dirs[j + 1]` is.
fn from_pattern(dirs: &[Direction], points: &[bool], arcs: &[bool]) -> Cone {
    let n = dirs.len();
    let cells: Vec<bool> = (0..2 * n).map(|c| if c % 2 == 0 { points[c / 2] } else { arcs[c / 2] }).collect();
    if cells.iter().all(|&b| b) {
        return Cone::Full;
    }
    if !cells.iter().any(|&b| b) {
        return Cone::Zero;
    }
    if !arcs.iter().any(|&b| b) {
        let hits: Vec<Direction> = (0..n).filter(|&j| points[j]).map(|j| dirs[j]).collect();
        return match hits.as_slice() {
            [d] => Cone::Ray(*d),
            [a, b] if *b == a.neg() => Cone::line(*a),
            _ => unreachable!("membership pattern of a convex cone"),
        };
    }
    let m = 2 * n;
    let start = (0..m).find(|&c| cells[c] && !cells[(c + m - 1) % m]).expect("pattern has a boundary");
    let mut end = start;
    while cells[(end + 1) % m] {
        end = (end + 1) % m;
    }
    debug_assert!(
        (0..m).all(|c| !cells[c] || (c + m - start) % m <= (end + m - start) % m),
        "membership pattern of a convex cone has one run"
    );
    let (lo, lo_closed) = if start % 2 == 0 { (dirs[start / 2], true) } else { (dirs[start / 2], false) };
    let (hi, hi_closed) = if end % 2 == 0 { (dirs[end / 2], true) } else { (dirs[(end / 2 + 1) % n], false) };
    Cone::fan(lo, lo_closed, hi, hi_closed).expect("convex run spans at most a half-plane")
}

/// Directions splitting the circle into cells on which both cones have
/// constant membership, with every gap below `π`.
fn cell_dirs(a: &Cone, b: &Cone) -> Vec<Direction> {
    let mut dirs = vec![Direction::E1, Direction::E2, Direction::E1.neg(), Direction::E2.neg()];
    for d in a.critical_dirs().into_iter().chain(b.critical_dirs()) {
        dirs.push(d);
        dirs.push(d.neg());
    }
    sort_dirs(dirs)
}

fn arc_mid(dirs: &[Direction], j: usize) -> Direction {
    Direction::bisector(dirs[j], dirs[(j + 1) % dirs.len()]).expect("gaps are below a half-turn")
}

/// Closed conic hull of finitely many directions.
pub(crate) fn hull(dirs: Vec<Direction>) -> Cone {
    let dirs = sort_dirs(dirs);
    let n = dirs.len();
    match n {
        0 => return Cone::Zero,
        1 => return Cone::Ray(dirs[0]),
        2 if dirs[1] == dirs[0].neg() => return Cone::line(dirs[0]),
        _ => {}
    }
    for i in 0..n {
        let j = (i + 1) % n;
        // A counterclockwise gap of at least a half-turn from dirs[i] to dirs[j]
        // leaves everything inside the sector from dirs[j] back to dirs[i].
        if dirs[i].cross(dirs[j]) <= 0 {
            return Cone::fan(dirs[j], true, dirs[i], true).expect("sector of at most a half-turn");
        }
    }
    Cone::Full
}

impl Cone {
    pub fn intersect(&self, other: &Cone) -> Cone {
        match (self, other) {
            (Cone::Zero, _) | (_, Cone::Zero) => return Cone::Zero,
            (Cone::Full, c) | (c, Cone::Full) => return *c,
            _ => {}
        }
        let dirs = cell_dirs(self, other);
        let inside = |d: &Direction| self.contains(d) && other.contains(d);
        let points: Vec<bool> = dirs.iter().map(inside).collect();
        let arcs: Vec<bool> = (0..dirs.len()).map(|j| inside(&arc_mid(&dirs, j))).collect();
        from_pattern(&dirs, &points, &arcs)
    }

    /// Minkowski sum `{p + q}`.
    pub fn sum(&self, other: &Cone) -> Cone {
        match (self, other) {
            (Cone::Zero, c) | (c, Cone::Zero) => return *c,
            (Cone::Full, _) | (_, Cone::Full) => return Cone::Full,
            _ => {}
        }
        // The closure of the sum is the hull of both closures; the relative
        // interior always belongs to the sum, and a boundary ray does exactly
        // when one of the summands touches it.
        let mut gens = closure_dirs(self);
        gens.extend(closure_dirs(other));
        let touches = |d: Direction| self.contains(&d) || other.contains(&d);
        match hull(gens) {
            Cone::Line(a) => {
                let (p, q) = (touches(a.dir()), touches(a.dir().neg()));
                match (p, q) {
                    (true, true) => Cone::Line(a),
                    (true, false) => Cone::Ray(a.dir()),
                    (false, true) => Cone::Ray(a.dir().neg()),
                    (false, false) => unreachable!("nonzero summands on a line"),
                }
            }
            Cone::Fan(f) => {
                Cone::fan(f.lo(), touches(f.lo()), f.hi(), touches(f.hi())).expect("flags of a valid sector")
            }
            h => h,
        }
    }

    /// Iterated sum over a list of cones.
    pub fn sum_all<'a, I: IntoIterator<Item = &'a Cone>>(cones: I) -> Cone {
        cones.into_iter().fold(Cone::Zero, |acc, c| acc.sum(c))
    }
}

/// Generators of the topological closure of a cone.
fn closure_dirs(c: &Cone) -> Vec<Direction> {
    match *c {
        Cone::Zero => vec![],
        Cone::Full => vec![Direction::E1, Direction::E2, Direction::E1.neg(), Direction::E2.neg()],
        Cone::Line(a) => vec![a.dir(), a.dir().neg()],
        Cone::Ray(d) => vec![d],
        Cone::Fan(f) if f.is_half_plane() => vec![f.lo(), f.lo().rot90(), f.hi()],
        Cone::Fan(f) => vec![f.lo(), f.hi()],
    }
}
