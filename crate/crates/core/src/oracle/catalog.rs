//! Fixed catalogs of cones and modules used by the suites.

use crate::char2_hahn::Dyadic;
use crate::char2_modules::{self, Char2Module};
use crate::plane_cones::{Cone, Direction};
use crate::qq_modules::QQModule;

fn dir(x: i64, y: i64) -> Direction {
    Direction::new(x, y).expect("catalog directions are nonzero")
}

fn fan4(out: &mut Vec<Cone>, lo: (i64, i64), hi: (i64, i64)) {
    for (a, b) in [(true, true), (true, false), (false, true), (false, false)] {
        out.push(Cone::fan(dir(lo.0, lo.1), a, dir(hi.0, hi.1), b).expect("catalog fan"));
    }
}

/// Forty distinct cones: zero, full, four lines, six rays, three quarter
/// sectors and three half-planes in every open/closed flavor, two diagonal
/// half-planes and a narrow sector.
pub fn cone_catalog() -> Vec<Cone> {
    let mut out = vec![Cone::Zero, Cone::Full];
    for (x, y) in [(1, 0), (0, 1), (1, 1), (1, -1)] {
        out.push(Cone::line(dir(x, y)));
    }
    for (x, y) in [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1)] {
        out.push(Cone::ray(dir(x, y)));
    }
    fan4(&mut out, (1, 0), (0, 1));
    fan4(&mut out, (0, 1), (-1, 0));
    fan4(&mut out, (1, -1), (1, 1));
    fan4(&mut out, (1, 0), (-1, 0));
    fan4(&mut out, (0, -1), (0, 1));
    fan4(&mut out, (-1, 0), (1, 0));
    out.push(Cone::fan(dir(1, 1), true, dir(-1, -1), true).expect("catalog fan"));
    out.push(Cone::fan(dir(1, 1), false, dir(-1, -1), false).expect("catalog fan"));
    out.push(Cone::fan(dir(2, 1), true, dir(1, 2), true).expect("catalog fan"));
    out.push(Cone::fan(dir(2, 1), false, dir(1, 2), false).expect("catalog fan"));
    out
}

/// Valid normal forms built from the cone catalog at minimum levels 0, 1, 2.
///
/// Level 0 takes every real lead with every admissible next cone; level 1
/// pairs each lead with zero, full and two rotating catalog cones; level 2
/// pairs each lead with zero and full.
pub fn module_catalog() -> Vec<QQModule> {
    let cones = cone_catalog();
    let mut out: Vec<QQModule> = Vec::new();
    let mut push = |m: QQModule| {
        if !out.contains(&m) {
            out.push(m);
        }
    };
    for lead in [Cone::ray(dir(1, 0)), Cone::ray(dir(-1, 0)), Cone::line(dir(1, 0))] {
        for next in &cones {
            if let Ok(m) = QQModule::validate(0, lead, *next) {
                push(m);
            }
        }
    }
    let n = cones.len();
    for (i, lead) in cones.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for next in [Cone::Zero, Cone::Full, cones[(7 * i + 3) % n], cones[(13 * i + 5) % n]] {
            if let Ok(m) = QQModule::validate(1, *lead, next) {
                push(m);
            }
        }
        for next in [Cone::Zero, Cone::Full] {
            if let Ok(m) = QQModule::validate(2, *lead, next) {
                push(m);
            }
        }
    }
    push(QQModule::Zero);
    out
}

pub fn char2_cuts() -> Vec<Dyadic> {
    ["0", "1/2", "1", "3/2", "2"].iter().map(|t| t.parse().expect("dyadic literal")).collect()
}

/// The 23 distinct modules with cut points in `{0, 1/2, 1, 3/2, 2}`.
pub fn char2_catalog() -> Vec<Char2Module> {
    char2_modules::catalog(&char2_cuts())
}
