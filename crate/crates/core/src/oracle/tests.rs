use super::*;
use crate::gauss_series::parse_series;
use crate::qq_modules::QQModule;

fn s(text: &str) -> Series {
    parse_series(text, Some(6)).unwrap()
}

#[test]
fn catalog_sizes() {
    let cones = cone_catalog();
    assert_eq!(cones.len(), 40);
    for (i, a) in cones.iter().enumerate() {
        assert!(!cones[i + 1..].contains(a), "duplicate cone {a}");
    }
    assert!(module_catalog().len() >= 200, "{}", module_catalog().len());
    assert_eq!(char2_catalog().len(), 23);
}

#[test]
fn f4_submodules() {
    assert_eq!(enumerate_f4_submodules().len(), 5);
}

#[test]
fn set_equiv_examples() {
    let xs = [1, 2, 3, 4];
    let r = set_equiv_report(|x: &i32| Some(*x > 1), |x: &i32| Some(*x >= 2), &xs, 7);
    assert!(r.ok());
    assert_eq!((r.checked, r.skipped, r.seed), (4, 0, 7));
    let r = set_equiv_report(|x: &i32| Some(*x > 2), |x: &i32| (*x != 4).then_some(*x >= 2), &xs, 7);
    assert_eq!((r.checked, r.skipped), (3, 1));
    assert_eq!(r.failures, vec!["2: first = false, second = true".to_string()]);
}

#[test]
fn closure_samples_are_members_and_deterministic() {
    let gens = [s("X"), s("-X + X^2"), s("iX^3")];
    let m = QQModule::from_generators(&gens).unwrap();
    let cfg = SampleConfig { seed: 11, count: 300, ..SampleConfig::default() };
    let xs = sample_closure_elements(&gens, &cfg);
    assert_eq!(xs, sample_closure_elements(&gens, &cfg));
    for x in &xs {
        assert!(x.is_zero_known() || m.member(x).unwrap(), "{x} not in {m}");
    }
    assert!(SampleConfig { count: 0, ..cfg }.validate().is_err());
}

#[test]
fn seeds_split_into_batches() {
    assert_ne!(batch_seed(1, 0), batch_seed(1, 1));
    assert_ne!(batch_seed(1, 0), batch_seed(2, 0));
    assert_eq!(splitmix64(0), 0xe220_a839_7b1d_cdaf);
}

fn realized(target: &str, gens: &[&str]) -> bool {
    let gens: Vec<Series> = gens.iter().map(|g| s(g)).collect();
    let t = s(target);
    let r = bounded_realization_search(&t, &gens);
    if r.found {
        assert_eq!(r.expand(&gens, t.precision()).unwrap().truncate(t.precision()), t);
    }
    r.found
}

#[test]
fn realization_examples() {
    assert!(!realized("iX^2", &["X"]));
    assert!(realized("X^3", &["X"]));
    assert!(realized("3X + X^2", &["X"]));
    assert!(realized("-X", &["X", "-X"]));
    assert!(realized("iX^2", &["X", "-X"]));
    assert!(realized("5 - 2X", &["1"]));
    assert!(realized("X + iX", &["X", "iX"]));
}

#[test]
fn split_examples() {
    let m1: QQModule = "levels(1; ray(1,0); zero)".parse().unwrap();
    let m2: QQModule = "levels(1; ray(0,1); zero)".parse().unwrap();
    let z = s("(1+i)X + X^2");
    let sp = split_sum_member(&z, &m1, &m2).unwrap();
    assert_eq!(sp.rule, SplitRule::ConeSplit);
    assert_eq!(&sp.x + &sp.y, z);
    let sp = split_sum_member(&s("X"), &m1, &m2).unwrap();
    assert_eq!(sp.rule, SplitRule::InFirst);
    let neg = m1.negate();
    let z = s("iX^2");
    let join = m1.sum(&neg);
    assert!(join.member(&z).unwrap());
    let sp = split_sum_member(&z, &m1, &neg).unwrap();
    assert_eq!(sp.rule, SplitRule::Cancellation(1));
}

#[test]
fn suites_are_deterministic() {
    let a = run_suite("char2", 3, Some(50)).unwrap();
    assert_eq!(a, run_suite("char2", 3, Some(50)).unwrap());
    assert!(a[0].ok(), "{:?}", a[0].failures);
    assert!(run_suite("nope", 0, None).is_err());
}
