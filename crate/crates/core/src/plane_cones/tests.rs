use super::*;
use proptest::prelude::*;

fn c(text: &str) -> Cone {
    text.parse().unwrap()
}

fn d(x: i64, y: i64) -> Direction {
    Direction::new(x, y).unwrap()
}

fn z(re: i64, im: i64) -> GaussRat {
    GaussRat::from_ints(re, im)
}

#[test]
fn membership_examples() {
    assert!(c("fan[cc](1,0;0,1)").contains(&z(1, 1)));
    assert!(!c("fan[oo](1,0;0,1)").contains(&z(1, 0)));
    assert!(c("line(1,1)").contains(&z(-2, -2)));
    assert!(c("zero").contains(&z(0, 0)));
    assert!(!c("ray(1,0)").contains(&z(-1, 0)));
    assert!(c("ray(1,0)").contains(&GaussRat::from_fracs((1, 3), (0, 1))));
}

#[test]
fn half_plane_boundaries() {
    let h = c("fan[co](1,0;-1,0)");
    assert!(h.contains(&z(3, 0)));
    assert!(!h.contains(&z(-3, 0)));
    assert!(h.contains(&z(-3, 1)));
    assert!(!h.contains(&z(0, -1)));
}

#[test]
fn normalizer() {
    assert_eq!(Cone::fan(d(1, 0), true, d(1, 0), true).unwrap(), Cone::Ray(d(1, 0)));
    assert_eq!(Cone::fan(d(1, 0), true, d(1, 0), false).unwrap(), Cone::Zero);
    assert!(Cone::fan(d(0, 1), true, d(1, 0), true).is_err());
    assert_eq!(c("line(-2,-4)"), c("line(1,2)"));
    assert_eq!(c("ray(2,4)"), Cone::Ray(d(1, 2)));
    assert!(Direction::new(0, 0).is_err());
}

#[test]
fn intersection_examples() {
    assert_eq!(c("line(1,1)").intersect(&c("fan[cc](1,0;0,1)")), c("ray(1,1)"));
    assert_eq!(c("fan[cc](1,0;0,1)").intersect(&c("fan[cc](0,1;-1,0)")), c("ray(0,1)"));
    assert_eq!(c("fan[co](1,0;0,1)").intersect(&c("fan[cc](0,1;-1,0)")), c("zero"));
    assert_eq!(c("fan[cc](1,0;-1,0)").intersect(&c("fan[cc](-1,0;1,0)")), c("line(1,0)"));
    assert_eq!(c("fan[oc](1,0;-1,0)").intersect(&c("fan[cc](-1,0;1,0)")), c("ray(-1,0)"));
    assert_eq!(c("fan[cc](1,0;-1,0)").intersect(&c("fan[oo](1,-1;1,1)")), c("fan[co](1,0;1,1)"));
    for x in catalog() {
        assert_eq!(Cone::Full.intersect(&x), x);
        assert_eq!(x.intersect(&x), x);
    }
}

#[test]
fn sum_examples() {
    assert_eq!(c("fan[cc](1,0;0,1)").sum(&c("fan[cc](0,1;-1,0)")), c("fan[cc](1,0;-1,0)"));
    assert_eq!(c("ray(1,0)").sum(&c("ray(-1,0)")), c("line(1,0)"));
    assert_eq!(c("fan[cc](1,0;-1,0)").sum(&c("ray(0,-1)")), c("full"));
    assert_eq!(c("fan[oo](1,0;0,1)").sum(&c("ray(1,0)")), c("fan[co](1,0;0,1)"));
    assert_eq!(c("fan[oo](1,0;-1,0)").sum(&c("ray(1,0)")), c("fan[co](1,0;-1,0)"));
    assert_eq!(c("fan[oo](1,0;-1,0)").sum(&c("line(1,0)")), c("fan[cc](1,0;-1,0)"));
    assert_eq!(c("fan[oo](1,0;-1,0)").sum(&c("fan[oo](-1,0;1,0)")), c("full"));
    assert_eq!(c("fan[oo](1,0;0,1)").sum(&c("fan[oo](0,1;-1,0)")), c("fan[oo](1,0;-1,0)"));
    assert_eq!(c("line(1,0)").sum(&c("line(0,1)")), c("full"));
    assert_eq!(c("ray(1,1)").sum(&c("ray(1,1)")), c("ray(1,1)"));
}

#[test]
fn closure_over_c() {
    assert_eq!(c("zero").cl_full(), c("zero"));
    assert_eq!(c("line(1,0)").cl_full(), c("full"));
    assert_eq!(c("ray(2,3)").cl_full(), c("full"));
}

#[test]
fn symmetry_and_generation() {
    assert!(c("line(1,2)").is_symmetric());
    assert!(c("fan[cc](1,0;-1,0)").is_symmetric());
    assert!(!c("fan[oc](1,0;-1,0)").is_symmetric());
    assert!(!c("fan[cc](1,0;0,1)").is_symmetric());
    assert!(!c("fan[oo](1,0;0,1)").is_fg());
    assert!(c("fan[cc](1,0;0,1)").is_fg());
    assert!(c("line(0,1)").is_fg());
    assert_eq!(c("line(1,0)").generators().unwrap(), vec![z(1, 0), z(-1, 0)]);
    assert_eq!(c("fan[cc](1,0;0,1)").generators().unwrap(), vec![z(1, 0), z(1, 1), z(0, 1)]);
    assert_eq!(c("full").generators().unwrap(), vec![z(1, 0), z(-1, 0), z(0, 1), z(0, -1)]);
    assert_eq!(c("fan[co](1,0;0,1)").generators(), Err(Error::NotFinitelyGenerated));
}

#[test]
fn real_restriction() {
    assert_eq!(c("full").restrict_real(), c("line(1,0)"));
    assert_eq!(c("fan[cc](1,0;0,1)").restrict_real(), c("ray(1,0)"));
    assert_eq!(c("fan[oo](1,0;0,1)").restrict_real(), c("zero"));
    assert_eq!(c("fan[oc](1,0;-1,0)").restrict_real(), c("ray(-1,0)"));
}

#[test]
fn text_and_json_round_trip() {
    for x in catalog() {
        assert_eq!(c(&x.to_string()), x);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Cone>(&j).unwrap(), x);
    }
    assert_eq!(
        serde_json::to_string(&c("fan[co](1,0;0,1)")).unwrap(),
        r#"{"kind":"fan","lo":[1,0],"lo_closed":true,"hi":[0,1],"hi_closed":false}"#
    );
    assert_eq!(serde_json::from_str::<Cone>(r#""ray(2,0)""#).unwrap(), c("ray(1,0)"));
    assert!(serde_json::from_str::<Cone>(r#"{"kind":"fan","lo":[0,1],"lo_closed":true,"hi":[1,0],"hi_closed":true}"#)
        .is_err());
    assert!("fan[cx](1,0;0,1)".parse::<Cone>().is_err());
    assert!("blob".parse::<Cone>().is_err());
}

#[test]
fn from_gauss_directions() {
    let g = GaussRat::from_fracs((1, 2), (3, 4));
    assert_eq!(Direction::from_gauss(&g).unwrap(), d(2, 3));
    assert!(Direction::from_gauss(&GaussRat::zero()).is_err());
}

fn catalog() -> Vec<Cone> {
    let mut out = vec![Cone::Zero, Cone::Full];
    for (x, y) in [(1, 0), (0, 1), (1, 1), (1, -1)] {
        out.push(Cone::line(d(x, y)));
    }
    for (x, y) in [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)] {
        out.push(Cone::ray(d(x, y)));
        for (lc, hc) in [(true, true), (true, false), (false, true), (false, false)] {
            out.push(Cone::fan(d(x, y), lc, d(x, y).rot90(), hc).unwrap());
            out.push(Cone::fan(d(x, y), lc, d(x, y).neg(), hc).unwrap());
        }
    }
    out
}

fn arb_dir() -> impl Strategy<Value = Direction> {
    (-3i64..=3, -3i64..=3).prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0).prop_map(|(x, y)| d(x, y))
}

fn arb_cone() -> impl Strategy<Value = Cone> {
    prop_oneof![
        Just(Cone::Zero),
        Just(Cone::Full),
        arb_dir().prop_map(Cone::line),
        arb_dir().prop_map(Cone::ray),
        (arb_dir(), any::<bool>(), arb_dir(), any::<bool>()).prop_map(|(a, p, b, q)| {
            if a.cross(b) >= 0 {
                Cone::fan(a, p, b, q).unwrap_or(Cone::Zero)
            } else {
                Cone::fan(b, p, a, q).unwrap()
            }
        }),
    ]
}

fn arb_open_fan() -> impl Strategy<Value = Cone> {
    (arb_dir(), arb_dir(), 0usize..3).prop_filter_map("open sector", |(a, b, k)| {
        let (lo, hi) = if a.cross(b) >= 0 { (a, b) } else { (b, a) };
        let (p, q) = [(false, false), (true, false), (false, true)][k];
        Cone::fan(lo, p, hi, q).ok().filter(|c| matches!(c, Cone::Fan(_)))
    })
}

fn arb_point() -> impl Strategy<Value = GaussRat> {
    (-5i64..=5, 1i64..=3, -5i64..=5, 1i64..=3).prop_map(|(a, b, c, e)| GaussRat::from_fracs((a, b), (c, e)))
}

proptest! {
    #[test]
    fn intersection_is_conjunction(a in arb_cone(), b in arb_cone(), p in prop::collection::vec(arb_point(), 20)) {
        let i = a.intersect(&b);
        for z in &p {
            prop_assert_eq!(i.contains(z), a.contains(z) && b.contains(z), "{} ∩ {} at {}", a, b, z);
        }
    }

    #[test]
    fn sum_contains_both_and_sums(a in arb_cone(), b in arb_cone(), p in arb_point(), q in arb_point()) {
        let s = a.sum(&b);
        if a.contains(&p) { prop_assert!(s.contains(&p)); }
        if b.contains(&q) { prop_assert!(s.contains(&q)); }
        if a.contains(&p) && b.contains(&q) { prop_assert!(s.contains(&(&p + &q))); }
        prop_assert_eq!(s, b.sum(&a));
    }

    #[test]
    fn cones_are_qq_modules(a in arb_cone(), p in arb_point(), q in arb_point(), t in arb_point()) {
        if a.contains(&p) && a.contains(&q) {
            prop_assert!(a.contains(&(&p + &q)));
            let t2 = GaussRat::real(t.re() * t.re());
            prop_assert!(a.contains(&(&t2 * &p)));
        }
    }

    #[test]
    fn generators_regenerate(a in arb_cone()) {
        prop_assume!(a.is_fg());
        let rays: Vec<Cone> = a.generator_dirs().unwrap().into_iter().map(Cone::ray).collect();
        prop_assert_eq!(Cone::sum_all(&rays), a);
    }

    #[test]
    fn non_fg_samples_fall_short(a in arb_open_fan(), p in prop::collection::vec(arb_point(), 12)) {
        let rays: Vec<Cone> = p.iter().filter(|z| !z.is_zero() && a.contains(*z))
            .map(|z| Cone::ray(Direction::from_gauss(z).unwrap())).collect();
        let gen = Cone::sum_all(&rays);
        prop_assert!(gen.is_subset_of(&a));
        prop_assert_ne!(gen, a);
    }

    #[test]
    fn negation_is_pointwise(a in arb_cone(), p in arb_point()) {
        prop_assert_eq!(a.negate().contains(&p), a.contains(&-&p));
    }

    #[test]
    fn symmetric_iff_antipodal_pair(a in arb_cone()) {
        let dirs = [d(1,0), d(1,1), d(0,1), d(-1,1), d(2,1), d(1,2), d(-1,2), d(-2,1), d(3,1), d(1,3), d(-3,1), d(-1,3), d(3,2), d(-3,2), d(2,3), d(-2,3)];
        let found = dirs.iter().any(|u| a.contains(u) && a.contains(&u.neg()));
        // Every cone in the strategy has boundary directions among small vectors, so a
        // symmetric one contains an antipodal pair from this list.
        prop_assert_eq!(found, a.is_symmetric());
    }
}
