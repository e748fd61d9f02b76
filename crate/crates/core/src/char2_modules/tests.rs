use super::*;
use crate::char2_hahn::{two_squares, DyadicSeries};
use proptest::prelude::*;
use std::cmp::Ordering;

fn dy(t: &str) -> Dyadic {
    t.parse().unwrap()
}

fn seg(t: &str, inclusive: bool) -> FinalSegment {
    FinalSegment::from(dy(t), inclusive)
}

fn desc(v: &str, p: F4) -> Descriptor {
    Descriptor::finite(dy(v), p).unwrap()
}

fn d2(cut: &str, level: F4Submodule) -> Char2Module {
    Char2Module::d2(dy(cut), level).unwrap()
}

fn cuts() -> Vec<Dyadic> {
    ["0", "1/2", "1", "3/2", "2"].iter().map(|t| dy(t)).collect()
}

fn grid() -> Vec<Descriptor> {
    let mut out = vec![Descriptor::zero()];
    for n in 0..=24u64 {
        let v = Dyadic::new(n, 3);
        for p in &F4::ALL[1..] {
            let d = Descriptor::finite(v.clone(), *p).unwrap();
            if d.in_a() {
                out.push(d);
            }
        }
    }
    out
}

#[test]
fn segment_order() {
    assert_eq!(seg_compare(&seg("1", true), &seg("1", false)), Ordering::Greater);
    assert_eq!(seg_compare(&seg("1/2", true), &seg("2", true)), Ordering::Greater);
    assert_eq!(seg_compare(&FinalSegment::Empty, &seg("7", false)), Ordering::Less);
    assert_eq!(seg_compare(&seg("1", false), &seg("1", false)), Ordering::Equal);
    assert!(seg("1", false).contains(&dy("9/8")));
    assert!(!seg("1", false).contains(&dy("1")));
}

#[test]
fn submodules() {
    let valid: Vec<u8> = (0..16u8).filter(|&m| F4Submodule::from_mask(m).is_ok()).collect();
    assert_eq!(valid.len(), 5);
    for m in F4Submodule::ALL {
        for a in m.elems() {
            for b in m.elems() {
                assert!(m.contains(a + b));
            }
        }
    }
    assert_eq!(F4Submodule::F2.sum(F4Submodule::W), F4Submodule::FULL);
    assert_eq!(F4Submodule::F2.intersect(F4Submodule::W), F4Submodule::ZERO);
    assert_eq!(F4Submodule::span([F4::W1]), F4Submodule::W1);
    assert!(F4Submodule::from_elems(&[F4::ZERO, F4::ONE, F4::W]).is_err());
}

#[test]
fn membership_examples() {
    let m = d2("1", F4Submodule::F2);
    assert!(!m.member(&desc("1", F4::W)));
    assert!(m.member(&desc("3/2", F4::W)));
    assert!(m.member(&desc("1", F4::ONE)));
    let n = Char2Module::d1(seg("1", false));
    assert!(!n.member(&desc("1", F4::ONE)));
    assert!(n.member(&desc("9/8", F4::W)));
    assert!(Char2Module::zero().member(&Descriptor::zero()));
    assert!(!Char2Module::zero().member(&desc("5", F4::ONE)));
}

#[test]
fn canonical_forms() {
    assert_eq!(d2("1", F4Submodule::FULL), Char2Module::d1(seg("1", true)));
    assert_eq!(d2("0", F4Submodule::F2), Char2Module::d1(seg("0", true)));
    assert!(Char2Module::d2(dy("0"), F4Submodule::W).is_err());
    assert!(Char2Module::d2(dy("1"), F4Submodule::ZERO).is_err());
    assert_eq!(catalog(&cuts()).len(), 1 + 4 * 5 + 2);
}

#[test]
fn intersection_examples() {
    let a = d2("1", F4Submodule::F2);
    let b = d2("1", F4Submodule::W);
    assert_eq!(a.intersect(&b), Char2Module::d1(seg("1", false)));
    let c = Char2Module::d1(seg("1/2", true));
    assert_eq!(a.intersect(&c), a);
    assert_eq!(a.intersect(&a), a);
}

#[test]
fn sum_examples() {
    let a = d2("1", F4Submodule::F2);
    let b = d2("1", F4Submodule::W);
    assert_eq!(a.sum(&b), Char2Module::d1(seg("1", true)));
    let c = Char2Module::d1(seg("1/2", true));
    assert_eq!(a.sum(&c), c);
    assert_eq!(a.sum(&a), a);
}

#[test]
fn classifier_examples() {
    let m = Char2Module::d1(seg("1", false));
    assert_eq!(m.phi(), Classifier { segment: seg("1", false), level: None });
    let m = d2("1", F4Submodule::W);
    assert_eq!(m.phi(), Classifier { segment: seg("1", true), level: Some(F4Submodule::W) });
    let m = Char2Module::d1(seg("0", true));
    assert_eq!(m.phi(), Classifier { segment: seg("0", true), level: Some(F4Submodule::F2) });

    let c = Classifier { segment: seg("1", false), level: None };
    assert_eq!(Char2Module::psi(&c).unwrap(), Char2Module::d1(seg("1", false)));
    let c = Classifier { segment: seg("1", true), level: Some(F4Submodule::F2) };
    assert_eq!(Char2Module::psi(&c).unwrap(), d2("1", F4Submodule::F2));
    let c = Classifier { segment: seg("0", true), level: Some(F4Submodule::W) };
    assert!(matches!(Char2Module::psi(&c), Err(Error::InvalidClassifier(_))));
    let c = Classifier { segment: seg("1", true), level: None };
    assert!(Char2Module::psi(&c).is_err());
    let c = Classifier { segment: FinalSegment::Empty, level: None };
    assert_eq!(Char2Module::psi(&c).unwrap(), Char2Module::zero());
}

#[test]
fn bijection_over_catalog() {
    for m in catalog(&cuts()) {
        assert_eq!(Char2Module::psi(&m.phi()).unwrap(), m);
    }
    let mut ok = 0;
    let mut segs = vec![FinalSegment::Empty];
    for c in cuts() {
        segs.push(FinalSegment::from(c.clone(), true));
        segs.push(FinalSegment::from(c, false));
    }
    for s in &segs {
        for level in [None].into_iter().chain(F4Submodule::ALL.map(Some)) {
            let c = Classifier { segment: s.clone(), level };
            if let Ok(m) = Char2Module::psi(&c) {
                assert_eq!(m.phi(), c);
                ok += 1;
            }
        }
    }
    assert_eq!(ok, catalog(&cuts()).len());
}

#[test]
fn generator_examples() {
    assert_eq!(Char2Module::from_generators(&[desc("1", F4::ONE)]).unwrap(), d2("1", F4Submodule::F2));
    assert_eq!(
        Char2Module::from_generators(&[desc("1", F4::ONE), desc("1", F4::W)]).unwrap(),
        Char2Module::d1(seg("1", true))
    );
    assert_eq!(Char2Module::from_generators(&[desc("3/2", F4::W)]).unwrap(), d2("3/2", F4Submodule::W));
    assert_eq!(Char2Module::from_generators(&[Descriptor::zero()]).unwrap(), Char2Module::zero());
    assert_eq!(
        Char2Module::from_generators(&[desc("2", F4::W), desc("1", F4::W1), Descriptor::zero()]).unwrap(),
        d2("1", F4Submodule::W1)
    );
    assert!(Char2Module::from_generators(&[desc("0", F4::W)]).is_err());
}

#[test]
fn lattice_laws_on_grid() {
    let cat = catalog(&cuts());
    let g = grid();
    for a in &cat {
        for b in &cat {
            let (i, s) = (a.intersect(b), a.sum(b));
            for d in &g {
                assert_eq!(i.member(d), a.member(d) && b.member(d), "{a} ∩ {b} at {d}");
                if a.member(d) || b.member(d) {
                    assert!(s.member(d), "{a} + {b} at {d}");
                }
            }
            assert_eq!(i, b.intersect(a));
            assert_eq!(s, b.sum(a));
        }
    }
}

/// Exhaustive small-sum search: descriptors reachable as sums of at most two
/// multiples `a²·x` of realized generators, over short coefficient series.
#[test]
fn generated_level_matches_small_sums() {
    let units: Vec<DyadicSeries> = ["1", "1 + X^{1/2}", "1 + w*X"].iter().map(|t| t.parse().unwrap()).collect();
    for gens in [vec![desc("1", F4::ONE)], vec![desc("3/2", F4::W)], vec![desc("1", F4::W), desc("2", F4::ONE)]] {
        let m = Char2Module::from_generators(&gens).unwrap();
        let g = gens.iter().filter_map(Descriptor::v).min().unwrap().clone();
        let realized: Vec<DyadicSeries> =
            gens.iter().map(|d| DyadicSeries::monomial(d.p(), d.v().unwrap().clone())).collect();
        let mut reach = vec![];
        for x in &realized {
            for a in &units {
                let ax = &a.square() * x;
                reach.push(ax.clone());
                for y in &realized {
                    for b in &units {
                        reach.push(&ax + &(&b.square() * y));
                    }
                }
            }
        }
        for r in &reach {
            assert!(m.member(&r.val_pan()));
        }
        for p in &F4::ALL[1..] {
            let d = Descriptor::finite(g.clone(), *p).unwrap();
            let hit = reach.iter().any(|r| r.val_pan() == d);
            assert_eq!(hit, m.member(&d), "{m} at {d}");
        }
    }
}

#[test]
fn json_forms() {
    let m = d2("1", F4Submodule::F2);
    let j = serde_json::to_string(&m).unwrap();
    assert_eq!(j, r#"{"kind":"d2","cut":"1","inclusive":true,"M":[0,1]}"#);
    assert_eq!(Char2Module::parse_json(&j).unwrap(), m);
    let z = serde_json::to_string(&Char2Module::zero()).unwrap();
    assert_eq!(z, r#"{"kind":"d1","cut":null}"#);
    assert_eq!(Char2Module::parse_json(&z).unwrap(), Char2Module::zero());
    let e = Char2Module::parse_json(r#"{"kind":"d1","cut":"1","inclusive":false}"#).unwrap();
    assert_eq!(e, Char2Module::d1(seg("1", false)));
    assert_eq!(
        Char2Module::parse_json(r#"{"kind":"d2","cut":"1","inclusive":true,"M":[0,1,2,3]}"#).unwrap(),
        Char2Module::d1(seg("1", true))
    );
    assert!(matches!(
        Char2Module::parse_json(r#"{"kind":"d2","cut":"0","inclusive":true,"M":[0,2]}"#),
        Err(Error::InvalidSubmodule(_))
    ));
    let c = serde_json::to_string(&m.phi()).unwrap();
    assert_eq!(c, r#"{"segment":{"cut":"1","inclusive":true},"level":[0,1]}"#);
    assert_eq!(Classifier::parse_json(&c).unwrap(), m.phi());
}

fn arb_module() -> impl Strategy<Value = Char2Module> {
    (0usize..23).prop_map(|i| catalog(&cuts())[i].clone())
}

fn realize(d: &Descriptor, tail: &DyadicSeries) -> DyadicSeries {
    match d.v() {
        None => DyadicSeries::zero(),
        Some(v) => &DyadicSeries::monomial(d.p(), v.clone()) + &tail.shift(&(v + &Dyadic::new(1, 4))),
    }
}

fn arb_member(m: Char2Module) -> impl Strategy<Value = (Char2Module, DyadicSeries)> {
    let ds: Vec<Descriptor> = grid().into_iter().filter(|d| m.member(d)).collect();
    (0..ds.len(), crate::char2_hahn::tests::arb_dyadic_series(4))
        .prop_map(move |(i, tail)| (m.clone(), realize(&ds[i], &tail)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn members_are_closed_under_addition(
        (m, x, y) in arb_module().prop_flat_map(|m| (arb_member(m.clone()), arb_member(m)))
            .prop_map(|((m, x), (_, y))| (m, x, y))
    ) {
        prop_assert!(m.member(&(&x + &y).val_pan()));
    }

    #[test]
    fn larger_valuations_are_reached_by_two_squares(
        (m, x) in arb_module().prop_flat_map(arb_member),
        shift in 1u64..24,
        c in 1u8..4,
    ) {
        prop_assume!(!x.is_zero());
        // y = q·x with q in the maximal ideal, rebuilt as (u² + v²)·x.
        let q = DyadicSeries::monomial(F4::from_code(c).unwrap(), Dyadic::new(shift, 3));
        let (u, v) = two_squares(&q).unwrap();
        let y = &(&u.square() + &v.square()) * &x;
        prop_assert_eq!(&y, &(&q * &x));
        prop_assert!(y.val_pan().v() > x.val_pan().v());
        prop_assert!(m.member(&y.val_pan()));
    }
}
